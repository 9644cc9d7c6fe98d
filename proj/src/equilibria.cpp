#include "trim/equilibria.hpp"

#include <algorithm>
#include <cmath>

namespace trim {

const char* to_string(Transversality t) {
    return t == Transversality::SignChange ? "sign_change" : "grazing";
}

void SolverConfig::validate() const {
    if (scan_points < 8)
        throw PreconditionError("SolverConfig: scan_points must be >= 8");
    if (!(theta_tol > 0.0))
        throw PreconditionError("SolverConfig: theta_tol must be > 0");
    if (!(root_tol > 0.0))
        throw PreconditionError("SolverConfig: root_tol must be > 0");
    if (!(grazing_tol > 0.0) || !(continuum_tol > 0.0) || !(merge_tol >= 0.0))
        throw PreconditionError("SolverConfig: tolerances must be positive");
}

double f_theta(const AeroModel& model, const VehicleParams& vp, const FlightCondition& fc,
               Angle theta) {
    const ForceBreakdown b = apparent_force(model, vp, fc, theta);
    // R(theta) e2 = (-sin theta, cos theta)
    const double s = std::sin(theta.radians());
    const double c = std::cos(theta.radians());
    return -b.f_total.x1 * s + b.f_total.x2 * c;
}

double equilibrium_thrust(const AeroModel& model, const VehicleParams& vp,
                          const FlightCondition& fc, Angle theta) {
    const ForceBreakdown b = apparent_force(model, vp, fc, theta);
    const double s = std::sin(theta.radians());
    const double c = std::cos(theta.radians());
    return b.f_total.x1 * c + b.f_total.x2 * s;
}

namespace {

struct FOnCircle {
    const AeroModel& model;
    const VehicleParams& vp;
    const FlightCondition& fc;
    double operator()(double theta) const { return f_theta(model, vp, fc, wrap(theta)); }
};

// Bisects f over [lo, hi] (unwrapped reals, f(lo)*f(hi) < 0) down to
// width <= theta_tol; returns the midpoint.
double bisect(const FOnCircle& f, double lo, double hi, double f_lo, double theta_tol) {
    for (int it = 0; it < 200 && (hi - lo) > theta_tol; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        const double f_mid = f(mid);
        if (f_mid == 0.0)
            return mid;
        if ((f_lo < 0.0) != (f_mid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

// Golden-section minimization of |f| over [lo, hi], for grazing zeros.
double minimize_abs(const FOnCircle& f, double lo, double hi, double theta_tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = std::abs(f(x1));
    double f2 = std::abs(f(x2));
    for (int it = 0; it < 300 && (b - a) > theta_tol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = std::abs(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = std::abs(f(x2));
        }
    }
    return a + 0.5 * (b - a);
}

// Circular distance between canonical angles.
double circ_dist(Angle a, Angle b) { return std::abs(wrap(a.radians() - b.radians()).radians()); }

} // namespace

EquilibriumSet find_equilibria(const AeroModel& model, const VehicleParams& vp,
                               const FlightCondition& fc, const SolverConfig& cfg) {
    cfg.validate();
    const FOnCircle f{model, vp, fc};
    const int n = cfg.scan_points;
    const double h = kTwoPi / n;

    // Sample theta_k = -pi + k*h, k = 1..n; the circular pair (theta_n,
    // theta_1) closes the scan through +-pi.
    std::vector<double> theta(n), fv(n);
    double max_abs = 0.0;
    for (int k = 0; k < n; ++k) {
        theta[k] = -kPi + h * (k + 1);
        fv[k] = f(theta[k]);
        max_abs = std::max(max_abs, std::abs(fv[k]));
    }

    EquilibriumSet out;
    out.max_abs_f = max_abs;
    if (cfg.record_scan) {
        out.scan.resize(n);
        for (int k = 0; k < n; ++k)
            out.scan[k] = {wrap(theta[k]).radians(), fv[k]};
    }

    const double mg = vp.mass * std::abs(vp.gravity);
    const double continuum_threshold = cfg.continuum_tol * (mg > 0.0 ? mg : 1.0);
    if (max_abs <= continuum_threshold) {
        out.continuum = true;
        return out;
    }

    const double grazing_threshold = cfg.grazing_tol * (1.0 + max_abs);
    const double root_accept = cfg.root_tol * (1.0 + max_abs);

    std::vector<Equilibrium> roots;
    auto push_root = [&](double theta_raw, Transversality kind, double lo, double hi) {
        Equilibrium e;
        e.theta_e = wrap(theta_raw);
        e.transversality = kind;
        e.bracket = {wrap(lo), wrap(hi)};
        e.residual = std::abs(f_theta(model, vp, fc, e.theta_e));
        e.thrust = equilibrium_thrust(model, vp, fc, e.theta_e);
        roots.push_back(e);
    };

    auto at = [&](int k) { return fv[(k % n + n) % n]; };

    for (int k = 0; k < n; ++k) {
        const double fk = fv[k];
        const double fk1 = at(k + 1);
        if (fk == 0.0) {
            // Sample sits exactly on a root; classify by neighbor signs.
            const bool flips = (at(k - 1) < 0.0) != (fk1 < 0.0) && at(k - 1) != 0.0 && fk1 != 0.0;
            push_root(theta[k], flips ? Transversality::SignChange : Transversality::Grazing,
                      theta[k] - h, theta[k] + h);
        } else if (fk1 != 0.0 && (fk < 0.0) != (fk1 < 0.0)) {
            const double root = bisect(f, theta[k], theta[k] + h, fk, cfg.theta_tol);
            push_root(root, Transversality::SignChange, theta[k], theta[k] + h);
        }
    }

    // Tangential zeros: interior local minima of |f| below the grazing
    // threshold with no sign change across the three samples.
    for (int k = 0; k < n; ++k) {
        const double fm = at(k - 1), fk = fv[k], fp = at(k + 1);
        if (fk == 0.0 || fm == 0.0 || fp == 0.0)
            continue;
        if ((fm < 0.0) != (fk < 0.0) || (fk < 0.0) != (fp < 0.0))
            continue;
        if (std::abs(fk) <= std::abs(fm) && std::abs(fk) <= std::abs(fp) &&
            std::abs(fk) <= grazing_threshold) {
            const double t = minimize_abs(f, theta[k] - h, theta[k] + h, cfg.theta_tol);
            if (std::abs(f(t)) <= grazing_threshold)
                push_root(t, Transversality::Grazing, theta[k] - h, theta[k] + h);
        }
    }

    // Sort and merge duplicates (adjacent brackets can converge to one
    // root near a grazing contact); prefer certified sign changes.
    std::sort(roots.begin(), roots.end(),
              [](const Equilibrium& a, const Equilibrium& b) {
                  return a.theta_e.radians() < b.theta_e.radians();
              });
    std::vector<Equilibrium> merged;
    auto better = [](const Equilibrium& a, const Equilibrium& b) {
        if (a.transversality != b.transversality)
            return a.transversality == Transversality::SignChange;
        return a.residual < b.residual;
    };
    for (const Equilibrium& e : roots) {
        if (!merged.empty() && circ_dist(merged.back().theta_e, e.theta_e) <= cfg.merge_tol) {
            if (better(e, merged.back()))
                merged.back() = e;
        } else {
            merged.push_back(e);
        }
    }
    if (merged.size() > 1 &&
        circ_dist(merged.front().theta_e, merged.back().theta_e) <= cfg.merge_tol) {
        if (better(merged.back(), merged.front()))
            merged.front() = merged.back();
        merged.pop_back();
    }

    // Residual guard: a refined sign-change root always re-evaluates well
    // below root_accept for Lipschitz f; drop anything that does not (it
    // would be a numerical artifact, not an equilibrium).
    std::erase_if(merged, [&](const Equilibrium& e) {
        const double lim =
            e.transversality == Transversality::SignChange ? root_accept : grazing_threshold;
        return e.residual > lim;
    });

    out.roots = std::move(merged);
    return out;
}

EquilibriumSet positive_thrust_subset(const EquilibriumSet& eqs) {
    EquilibriumSet out;
    out.continuum = eqs.continuum;
    out.max_abs_f = eqs.max_abs_f;
    for (const Equilibrium& e : eqs.roots)
        if (e.thrust >= 0.0)
            out.roots.push_back(e);
    return out;
}

std::optional<Angle> theta_zero(const FlightCondition& fc, Angle delta) {
    const Vec2 x_rw = relative_velocity(fc);
    if (x_rw.is_zero())
        return std::nullopt;
    const Angle gamma_r = atan2_angle(x_rw);
    return wrap(gamma_r.radians() - kPi + delta.radians());
}

} // namespace trim
