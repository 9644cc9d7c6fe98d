"""Smoke tests for the trimeq extension and the trim CLI.

Environment (set by ctest, or export manually):
  PYTHONPATH  -> <build>/python          (the staged trimeq package)
  TRIM_CLI    -> <build>/tools/trim      (the CLI binary)
  TRIM_REPO   -> repository root         (presets, schemas, data)
"""

import json
import math
import os
import subprocess

import pytest

import trimeq as t

REPO = os.environ.get("TRIM_REPO", os.path.join(os.path.dirname(__file__), "..", ".."))
CLI = os.environ.get("TRIM_CLI")

jsonschema = pytest.importorskip("jsonschema")

with open(os.path.join(REPO, "schemas", "trim-output.schema.json")) as fh:
    SCHEMA = json.load(fh)


def run_cli(*args, expect=0):
    assert CLI, "TRIM_CLI not set"
    env = dict(os.environ, TRIM_PRESET_DIR=os.path.join(REPO, "presets"))
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    assert proc.returncode == expect, f"{args}: rc={proc.returncode}, stderr={proc.stderr}"
    return proc.stdout


# --- module ---------------------------------------------------------------

def test_hover_equilibria():
    eqs = t.find_equilibria(t.counterexample_model(0.1), t.VehicleParams(2.0, 9.81, 0.0),
                            t.FlightCondition())
    assert len(eqs) == 2 and not eqs.continuum
    thetas = sorted(abs(e.theta) for e in eqs.roots)
    assert thetas[0] < 1e-8
    assert abs(thetas[1] - math.pi) < 1e-8
    pos = t.positive_thrust_subset(eqs)
    assert [round(e.thrust, 9) for e in pos.roots] == [19.62]


def test_lemma1_reproduction():
    rep = t.reproduce_lemma1(0.1, 1.0, 1.0, 9.81)
    assert rep.max_abs_dev_from_one <= 1e-9
    assert rep.equilibrium_count == 0
    assert rep.passivity.passed


def test_scan_matches_closed_form():
    m = t.counterexample_model(0.1)
    vp = t.VehicleParams(2.0, 9.81, 0.0)
    fc = t.FlightCondition()
    for k in range(1, 13):
        theta = -math.pi + 2.0 * math.pi * k / 12
        assert t.f_theta(m, vp, fc, theta) == pytest.approx(-2.0 * 9.81 * math.sin(theta))


def test_polar_pipeline():
    tab = t.load_polar_csv(os.path.join(REPO, "data", "polars", "naca0021.csv"))
    assert len(tab) == 181 and tab.reynolds == 160000.0
    model = t.build_model(t.extend_symmetric(tab), 0.37, t.SymmetryClass.SYMMETRIC)
    assert t.verify_symmetry(model).passed
    stall = t.check_stall_condition(model)
    assert stall.satisfied and 0.0 < stall.alpha_s_deg < 90.0


def test_theorem_runners():
    fp = t.bisym_flat_plate_model(0.05, 1.2, 1.0, 0.37)
    assert t.check_theorem1_applicability(fp, 1.1) == t.Theorem1Applicability.ITEM_II
    rep = t.run_theorem1_item_ii(fp, t.VehicleParams(1.5, 9.81, 0.4), 25, 99)
    assert rep.satisfied and rep.worst_case <= 1e-11


def test_errors_surface_as_python_exceptions():
    with pytest.raises(Exception) as exc:
        t.counterexample_model(-1.0)
    assert "c0" in str(exc.value)
    with pytest.raises(Exception):
        t.parse_polar_csv("not,a,polar\n")


# --- CLI --------------------------------------------------------------------

def test_cli_find_hover_schema_and_exit():
    out = json.loads(run_cli("find", "--preset", "hover"))
    jsonschema.validate(out, SCHEMA)
    assert out["continuum"] is False
    assert len(out["equilibria"]) == 2
    assert len(out["positive_thrust_equilibria"]) == 1


def test_cli_find_lemma1_exits_3():
    out = json.loads(run_cli("find", "--preset", "lemma1", expect=3))
    jsonschema.validate(out, SCHEMA)
    assert out["equilibria"] == []


def test_cli_scan_csv():
    out = run_cli("scan", "--preset", "hover", "--samples", "5")
    lines = out.strip().splitlines()
    assert lines[0] == "theta_deg,f_value"
    assert len(lines) == 6
    theta_deg, f = map(float, lines[1].split(","))
    assert f == pytest.approx(-2.0 * 9.81 * math.sin(math.radians(theta_deg)))


def test_cli_check_reports():
    out = json.loads(run_cli("check", "passivity", "--preset", "lemma1"))
    jsonschema.validate(out, SCHEMA)
    assert out["satisfied"] is True

    out = json.loads(run_cli("check", "bisymmetry", "--preset", "lemma1", expect=3))
    jsonschema.validate(out, SCHEMA)
    assert out["satisfied"] is False

    out = json.loads(run_cli("check", "stall-condition", "--preset", "naca0021"))
    jsonschema.validate(out, SCHEMA)
    assert out["report"]["alpha_s_deg"] == pytest.approx(19.789, abs=0.01)


def test_cli_check_theorem1_is_seed_deterministic():
    a = run_cli("check", "theorem1", "--preset", "bisym-demo", "--samples", "20", "--seed", "5")
    b = run_cli("check", "theorem1", "--preset", "bisym-demo", "--samples", "20", "--seed", "5")
    assert a == b
    out = json.loads(a)
    jsonschema.validate(out, SCHEMA)
    assert out["applicability"] == "item_ii"
    assert out["satisfied"] is True


def test_cli_scan_sign_changes_match_find():
    out = run_cli("scan", "--preset", "bisym-demo", "--samples", "720")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    f = [float(r[1]) for r in rows]
    flips = sum(1 for i in range(len(f)) if f[i - 1] * f[i] < 0.0)

    found = json.loads(run_cli("find", "--preset", "bisym-demo"))
    transversal = [e for e in found["equilibria"] if e["transversality"] == "sign_change"]
    assert flips == len(transversal) == 2


def test_cli_output_format_overrides():
    out = run_cli("find", "--preset", "hover", "--output", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "theta_deg,thrust_N,transversality"
    assert len(lines) == 3

    out = json.loads(run_cli("scan", "--preset", "hover", "--samples", "8", "--output", "json"))
    jsonschema.validate(out, SCHEMA)
    assert len(out["scan"]) == 8


def test_cli_counterexample():
    out = json.loads(run_cli("counterexample"))
    jsonschema.validate(out, SCHEMA)
    assert out["reproduced"] is True
    assert out["equilibrium_count"] == 0


def test_cli_error_paths():
    run_cli("find", "--config", "/nonexistent/config.json", expect=1)
    run_cli("find", expect=1)  # neither --config nor --preset
