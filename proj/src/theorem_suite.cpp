#include "trim/theorem_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace trim {

const char* to_string(Theorem1Applicability a) {
    switch (a) {
    case Theorem1Applicability::ItemI: return "item_i";
    case Theorem1Applicability::ItemII: return "item_ii";
    case Theorem1Applicability::NotApplicable: return "not_applicable";
    }
    return "?";
}

Theorem1Applicability check_theorem1_applicability(const AeroModel& model, Angle delta) {
    if (model.symmetry_class() == SymmetryClass::Bisymmetric)
        return Theorem1Applicability::ItemII;
    if (model.symmetry_class() == SymmetryClass::Symmetric &&
        std::abs(std::sin(delta.radians())) <= kSinDeltaTol)
        return Theorem1Applicability::ItemI;
    return Theorem1Applicability::NotApplicable;
}

StallConditionReport check_stall_condition(const AeroModel& model, int grid) {
    if (grid < 16)
        throw PreconditionError("check_stall_condition: grid must be >= 16");

    StallConditionReport r;
    r.grid = grid;
    r.cd0 = model.drag(Angle(0.0));
    r.cd_pi = model.drag(Angle(kPi));
    if (!(r.cd_pi > r.cd0))
        throw CdOrderingError("check_stall_condition requires c_D(pi) > c_D(0); got c_D(pi) = " +
                              std::to_string(r.cd_pi) + ", c_D(0) = " + std::to_string(r.cd0));

    r.margin = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= grid; ++k) {
        const double a = (0.5 * kPi) * k / (grid + 1); // interior of (0, pi/2)
        const auto [cl, cd] = eval_coeffs(model, Angle(a));
        if (!(cl > 0.0))
            continue;
        const double margin = std::tan(a) * cl - (cd - r.cd_pi);
        r.margin = std::min(r.margin, margin);
        if (!r.satisfied && margin <= 0.0) {
            r.satisfied = true;
            r.alpha_s = Angle(a);
        }
    }
    return r;
}

ThmTwoDiagnostics thm2_diagnostics(const AeroModel& model, const VehicleParams& vp,
                                   const FlightCondition& fc) {
    const double sin_delta = std::sin(vp.delta.radians());
    if (std::abs(sin_delta) <= kSinDeltaTol)
        throw PreconditionError("thm2_diagnostics: sin(delta) == 0 (use the theorem-1 path)");
    const Vec2 x_rw = relative_velocity(fc);
    if (x_rw.is_zero())
        throw PreconditionError("thm2_diagnostics: |v_ref - v_wind| == 0");

    ThmTwoDiagnostics d;
    d.theta0 = *theta_zero(fc, vp.delta);
    d.k_v2 = model.ka() * x_rw.norm_sq();
    d.cd0 = model.drag(Angle(0.0));
    d.cd_pi = model.drag(Angle(kPi));

    const Vec2 f_gr = vp.mass * vp.gravity * kE1 - vp.mass * fc.a_ref;
    const Mat2 r0 = rotation(d.theta0);
    const double along_e1 = f_gr.dot(r0 * kE1);
    const double along_e2 = f_gr.dot(r0 * kE2);
    d.a_t = along_e2 / (d.k_v2 * sin_delta);
    d.b_t = along_e1 / d.k_v2;

    const double a_t = d.a_t;
    const double b_t = d.b_t;
    const double cos_delta = std::cos(vp.delta.radians());
    // The evaluators own a copy of the model so they stay valid past the call.
    d.delta_a = [model, a_t](double ab) {
        const auto [cl, cd] = eval_coeffs(model, Angle(ab));
        return (a_t - cd) * std::cos(ab) + cl * std::sin(ab);
    };
    d.lambda_b = [model, b_t, cos_delta](double ab) {
        const auto [cl, cd] = eval_coeffs(model, Angle(ab));
        return (b_t + cd * cos_delta) * std::sin(ab) + cl * std::cos(ab) * cos_delta;
    };

    // f(theta0)*f(theta0+pi) = k_v2^2 sin^2(delta) * (a_t - cd0)(cd_pi - a_t):
    // a nonpositive product already certifies a root in [theta0, theta0+pi].
    const double endpoint_product = (d.a_t - d.cd0) * (d.cd_pi - d.a_t);
    if (endpoint_product <= 0.0) {
        d.bracket = {d.theta0, wrap(d.theta0.radians() + kPi)};
        d.grazing_equality = endpoint_product == 0.0;
        return d;
    }

    // Otherwise cd0 < a_t < cd_pi (drag ordering permitting) and the
    // stall condition supplies a sign change of Delta_a on [0, alpha_s].
    try {
        const StallConditionReport stall = check_stall_condition(model);
        if (stall.satisfied)
            d.alpha_s = stall.alpha_s;
    } catch (const CdOrderingError&) {
        return d; // theorem hypotheses absent; diagnostics still useful
    }
    if (!d.alpha_s)
        return d;

    const double da_zero = d.delta_a(0.0);
    const double da_s = d.delta_a(d.alpha_s->radians());
    if (da_zero < 0.0 || da_s > 0.0)
        return d;
    d.grazing_equality = da_zero == 0.0 || da_s == 0.0;

    // Bisect Delta_a on [0, alpha_s] for the bracket half-width.
    double lo = 0.0, hi = d.alpha_s->radians();
    double f_lo = da_zero;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = d.delta_a(mid);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_lo > 0.0) == (f_mid > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    const double alpha_a = 0.5 * (lo + hi);
    d.bracket = {wrap(d.theta0.radians() - alpha_a), wrap(d.theta0.radians() + alpha_a)};
    return d;
}

Lemma1Report reproduce_lemma1(double c0, double ka, double m, double g) {
    if (!(c0 > 0.0) || !(ka > 0.0))
        throw ValidationError("reproduce_lemma1: c0 and ka must be > 0");

    const AeroModel model = counterexample_model(c0, ka);
    const VehicleParams vp(m, g, Angle(0.5 * kPi));
    // gamma_r = pi/2 and k_a |v|^2 = 1; F_gr = (0, c0+1).
    const FlightCondition fc(Vec2{0.0, 1.0 / std::sqrt(ka)}, Vec2{g, -(c0 + 1.0) / m},
                             Vec2{0.0, 0.0});

    Lemma1Report rep{c0, ka, vp, fc, 0.0, 0.0, 0.0, 0, false, {}, {}};
    rep.f_min = std::numeric_limits<double>::infinity();
    rep.f_max = -std::numeric_limits<double>::infinity();
    const int n = 3600;
    for (int k = 1; k <= n; ++k) {
        const double f = f_theta(model, vp, fc, wrap(-kPi + kTwoPi * k / n));
        rep.f_min = std::min(rep.f_min, f);
        rep.f_max = std::max(rep.f_max, f);
        rep.max_abs_dev_from_one = std::max(rep.max_abs_dev_from_one, std::abs(f - 1.0));
    }
    rep.equilibria = find_equilibria(model, vp, fc);
    rep.equilibrium_count = static_cast<int>(rep.equilibria.roots.size());
    rep.continuum = rep.equilibria.continuum;
    rep.passivity = check_passivity(model);
    return rep;
}

FlightCondition sample_flight_condition(std::mt19937_64& rng, double gravity,
                                        const ScenarioDistribution& dist) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto polar_vec = [&](double max_speed) {
        const double speed = max_speed * u01(rng);
        const double ang = (2.0 * u01(rng) - 1.0) * kPi;
        return Vec2{speed * std::cos(ang), speed * std::sin(ang)};
    };
    const Vec2 v_ref = polar_vec(dist.max_ref_speed);
    const Vec2 v_wind = polar_vec(dist.max_wind_speed);
    const double g_abs = std::abs(gravity) > 0.0 ? std::abs(gravity) : 9.81;
    const double span = dist.accel_gravity_span * g_abs;
    const Vec2 a_ref{span * (2.0 * u01(rng) - 1.0), span * (2.0 * u01(rng) - 1.0)};
    return FlightCondition(v_ref, a_ref, v_wind);
}

namespace {

std::string describe(const FlightCondition& fc) {
    std::ostringstream os;
    os << "v_ref=(" << fc.v_ref.x1 << ", " << fc.v_ref.x2 << ") a_ref=(" << fc.a_ref.x1 << ", "
       << fc.a_ref.x2 << ") v_wind=(" << fc.v_wind.x1 << ", " << fc.v_wind.x2 << ")";
    return os.str();
}

// Membership of x in the CCW arc [start, start + width], width in [0, 2pi).
bool in_arc(Angle x, Angle start, double width) {
    double d = x.radians() - start.radians();
    while (d < 0.0)
        d += kTwoPi;
    return d <= width || std::abs(d - kTwoPi) < 1e-12;
}

} // namespace

TheoremCheckReport run_theorem1_item_i(const AeroModel& model, const VehicleParams& vp,
                                       int n_scenarios, std::uint64_t seed,
                                       const SolverConfig& cfg, const ScenarioDistribution& dist) {
    if (model.symmetry_class() == SymmetryClass::Generic)
        throw PreconditionError("theorem 1 i requires a symmetric (or bisymmetric) model");
    if (std::abs(std::sin(vp.delta.radians())) > kSinDeltaTol)
        throw PreconditionError("theorem 1 i requires sin(delta) == 0");

    std::mt19937_64 rng(seed);
    TheoremCheckReport rep;
    rep.scenario_count = n_scenarios;
    rep.worst_case = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_scenarios; ++i) {
        const FlightCondition fc = sample_flight_condition(rng, vp.gravity, dist);
        const EquilibriumSet eqs = find_equilibria(model, vp, fc, cfg);

        int transversal = 0;
        bool lower_arc = false, upper_arc = false;
        const std::optional<Angle> th0 = theta_zero(fc, vp.delta);
        for (const Equilibrium& e : eqs.roots) {
            if (e.transversality != Transversality::SignChange)
                continue;
            ++transversal;
            if (th0) {
                if (in_arc(e.theta_e, wrap(th0->radians() - kPi), kPi))
                    lower_arc = true;
                if (in_arc(e.theta_e, *th0, kPi))
                    upper_arc = true;
            }
        }
        const bool arcs_ok = !th0 || (lower_arc && upper_arc);
        const bool ok = eqs.continuum || (transversal >= 2 && arcs_ok);
        rep.worst_case = std::min(rep.worst_case, static_cast<double>(transversal));
        if (!ok) {
            ++rep.violation_count;
            if (rep.worst_detail.empty())
                rep.worst_detail = "scenario " + std::to_string(i) + ": " + describe(fc) + " -> " +
                                   std::to_string(transversal) + " transversal roots";
        }
    }
    rep.satisfied = rep.violation_count == 0;
    return rep;
}

TheoremCheckReport run_theorem1_item_ii(const AeroModel& model, const VehicleParams& vp,
                                        int n_scenarios, std::uint64_t seed,
                                        const SolverConfig& cfg, const ScenarioDistribution& dist,
                                        int n_theta, double antisym_tol) {
    if (model.symmetry_class() != SymmetryClass::Bisymmetric)
        throw PreconditionError("theorem 1 ii requires a bisymmetric model");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    TheoremCheckReport rep;
    rep.scenario_count = n_scenarios;
    for (int i = 0; i < n_scenarios; ++i) {
        const FlightCondition fc = sample_flight_condition(rng, vp.gravity, dist);

        double worst_resid = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const Angle th = wrap((2.0 * u01(rng) - 1.0) * kPi);
            const Angle th_pi = wrap(th.radians() + kPi);
            const ForceBreakdown b0 = apparent_force(model, vp, fc, th);
            const ForceBreakdown b1 = apparent_force(model, vp, fc, th_pi);
            const double f0 = -b0.f_total.x1 * std::sin(th.radians()) +
                              b0.f_total.x2 * std::cos(th.radians());
            const double f1 = -b1.f_total.x1 * std::sin(th_pi.radians()) +
                              b1.f_total.x2 * std::cos(th_pi.radians());
            const double scale =
                1.0 + b0.f_gr.norm() + b0.f_aero.norm() + b1.f_aero.norm();
            worst_resid = std::max(worst_resid, std::abs(f0 + f1) / scale);
        }

        const EquilibriumSet eqs = find_equilibria(model, vp, fc, cfg);
        const bool positive_ok = eqs.continuum || !positive_thrust_subset(eqs).roots.empty();

        rep.worst_case = std::max(rep.worst_case, worst_resid);
        if (worst_resid > antisym_tol || !positive_ok) {
            ++rep.violation_count;
            if (rep.worst_detail.empty())
                rep.worst_detail = "scenario " + std::to_string(i) + ": " + describe(fc) +
                                   " -> antisym residual " + std::to_string(worst_resid) +
                                   (positive_ok ? "" : ", empty positive-thrust set");
        }
    }
    rep.satisfied = rep.violation_count == 0;
    return rep;
}

TheoremCheckReport run_theorem2_existence(const AeroModel& model, double mass, double gravity,
                                          int n_scenarios, std::uint64_t seed,
                                          const SolverConfig& cfg,
                                          const ScenarioDistribution& dist) {
    if (model.symmetry_class() == SymmetryClass::Generic)
        throw PreconditionError("theorem 2 requires a symmetric model");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    TheoremCheckReport rep;
    rep.scenario_count = n_scenarios;
    rep.worst_case = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_scenarios; ++i) {
        double delta = 0.0;
        do {
            delta = (2.0 * u01(rng) - 1.0) * kPi;
        } while (std::abs(std::sin(delta)) < 1e-2);
        const VehicleParams vp(mass, gravity, Angle(delta));
        const FlightCondition fc = sample_flight_condition(rng, gravity, dist);
        const EquilibriumSet eqs = find_equilibria(model, vp, fc, cfg);
        const double count = eqs.continuum ? 1.0 : static_cast<double>(eqs.roots.size());
        rep.worst_case = std::min(rep.worst_case, count);
        if (count < 1.0) {
            ++rep.violation_count;
            if (rep.worst_detail.empty())
                rep.worst_detail = "scenario " + std::to_string(i) + ": delta=" +
                                   std::to_string(delta) + " " + describe(fc) + " -> no roots";
        }
    }
    rep.satisfied = rep.violation_count == 0;
    return rep;
}

} // namespace trim
