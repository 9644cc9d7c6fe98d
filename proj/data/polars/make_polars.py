#!/usr/bin/env python3
"""Generate the bundled 0-180 degree symmetric-airfoil polar fixtures.

The four CSVs (naca0012/0015/0018/0021) are synthetic representative
polars in the style of published 180-degree wind-tunnel tables for thick
symmetric sections at low Reynolds number: attached flow up to stall, a
sharp post-stall lift drop with a fast drag rise, a flat-plate-like deep
stall regime, and reversed flow toward 180 degrees. They are fixtures for
tests and demos, not measured data.

Run from the repo root:  python3 data/polars/make_polars.py
"""

import math
import os

import numpy as np
from scipy.interpolate import PchipInterpolator

OUT_DIR = os.path.dirname(os.path.abspath(__file__))

# name -> (alpha_stall, cl_max, cl_trough, cd0, cd_stall, cd_trough, cl_2nd_peak, cd90, cd180)
AIRFOILS = {
    "naca0012": (12.5, 0.93, 0.575, 0.0115, 0.047, 0.285, 1.00, 1.85, 0.030),
    "naca0015": (13.5, 0.97, 0.595, 0.0125, 0.054, 0.295, 1.03, 1.90, 0.032),
    "naca0018": (14.5, 1.01, 0.610, 0.0135, 0.061, 0.305, 1.05, 1.95, 0.034),
    "naca0021": (15.5, 1.04, 0.620, 0.0145, 0.068, 0.315, 1.07, 2.00, 0.036),
}

REYNOLDS = 160000.0
MACH = 0.3


def knots(a_stall, cl_max, cl_trough, cd0, cd_stall, cd_trough, cl_peak2, cd90, cd180):
    """Anchor points (alpha_deg, cl, cd); filled to a 1-degree grid by pchip."""
    a_drop = a_stall + 2.0    # lift collapse midpoint
    a_trough = a_stall + 5.0  # post-stall lift minimum
    a_rec = a_stall + 11.0    # re-attachment onto the flat-plate branch
    pts = [
        (0.0, 0.0, cd0),
        (0.25 * a_stall, cl_max * math.sin(math.radians(22.5)), cd0 * 1.25),
        (0.50 * a_stall, cl_max * math.sin(math.radians(45.0)), cd0 * 2.1),
        (0.75 * a_stall, cl_max * math.sin(math.radians(67.5)), cd0 * 3.4),
        (a_stall, cl_max, cd_stall),
        (a_drop, 0.86 * cl_max, 0.45 * cd_trough),
        (a_trough, cl_trough, cd_trough),
        (a_rec, 0.70 * cl_peak2 * math.sin(math.radians(2.0 * a_rec)) + 0.30 * cl_trough,
         cd_trough + (cd90 - cd_trough) * math.sin(math.radians(a_rec)) ** 2 * 0.8),
        (35.0, cl_peak2 * math.sin(math.radians(70.0)) * 0.97, 0.20 + (cd90 - 0.20) * math.sin(math.radians(35.0)) ** 2),
        (45.0, cl_peak2, 0.16 + (cd90 - 0.16) * math.sin(math.radians(45.0)) ** 2),
        (60.0, cl_peak2 * math.sin(math.radians(120.0)) * 1.02, 0.10 + (cd90 - 0.10) * math.sin(math.radians(60.0)) ** 2),
        (75.0, cl_peak2 * math.sin(math.radians(150.0)) * 1.00, 0.05 + (cd90 - 0.05) * math.sin(math.radians(75.0)) ** 2),
        (90.0, 0.0, cd90),
        (105.0, -0.45, 0.05 + (cd90 - 0.05) * math.sin(math.radians(105.0)) ** 2),
        (120.0, -0.78, 0.10 + (cd90 - 0.10) * math.sin(math.radians(120.0)) ** 2),
        (135.0, -0.93, 0.16 + (cd90 - 0.16) * math.sin(math.radians(135.0)) ** 2),
        (150.0, -0.74, 0.14 + (cd90 - 0.14) * math.sin(math.radians(150.0)) ** 2),
        (160.0, -0.52, 0.30),
        (168.0, -0.30, 0.17),
        (173.0, -0.18, 0.10),
        (177.0, -0.08, 0.058),
        (180.0, 0.0, cd180),
    ]
    return pts


def build_polar(params):
    pts = knots(*params)
    a = np.array([p[0] for p in pts])
    cl = np.array([p[1] for p in pts])
    cd = np.array([p[2] for p in pts])
    grid = np.arange(0.0, 180.0 + 0.5, 1.0)
    cl_i = PchipInterpolator(a, cl)(grid)
    cd_i = PchipInterpolator(a, cd)(grid)
    cl_i[0] = 0.0
    cl_i[-1] = 0.0
    return grid, cl_i, cd_i


def stall_condition_first_alpha(grid, cl, cd):
    """First alpha in (0, 90) with cl > 0 and tan(a)*cl <= cd - cd(180)."""
    cd_pi = cd[-1]
    for a, l, d in zip(grid, cl, cd):
        if 0.0 < a < 90.0 and l > 0.0:
            if math.tan(math.radians(a)) * l - (d - cd_pi) <= 0.0:
                return a
    return None


def main():
    for name, params in AIRFOILS.items():
        grid, cl, cd = build_polar(params)
        assert np.all(cd > 0.0), name
        assert cd[-1] > cd[0], name
        a_s = stall_condition_first_alpha(grid, cl, cd)
        assert a_s is not None and 0.0 < a_s < 90.0, name
        path = os.path.join(OUT_DIR, name + ".csv")
        with open(path, "w") as f:
            f.write(f"# name=NACA {name[4:]}\n")
            f.write(f"# Re={REYNOLDS:g}\n")
            f.write(f"# M={MACH:g}\n")
            f.write("# provenance: synthetic representative polar generated by make_polars.py; not measured data\n")
            f.write("alpha_deg,cl,cd\n")
            for a, l, d in zip(grid, cl, cd):
                f.write(f"{a:.1f},{l:.6f},{d:.6f}\n")
        print(f"{name}: {len(grid)} rows, cd0={cd[0]:.4f}, cd180={cd[-1]:.4f}, "
              f"first stall-condition alpha ~ {a_s:.1f} deg")


if __name__ == "__main__":
    main()
