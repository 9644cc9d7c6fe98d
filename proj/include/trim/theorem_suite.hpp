#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "trim/equilibria.hpp"

namespace trim {

/// |sin(delta)| at or below this counts as "thrust parallel to the
/// zero-lift direction" (covers the rounding of delta = pi).
inline constexpr double kSinDeltaTol = 1e-12;

enum class Theorem1Applicability { ItemI, ItemII, NotApplicable };

const char* to_string(Theorem1Applicability a);

/// ItemII for verified bisymmetric models (any delta); ItemI for verified
/// symmetric models with sin(delta) == 0 within tolerance; NotApplicable
/// otherwise. Classes are the declared-and-verified ones, never inferred.
Theorem1Applicability check_theorem1_applicability(const AeroModel& model, Angle delta);

inline constexpr int kDefaultStallGrid = 1800; // 0.05 deg steps on (0, 90)

/// Outcome of scanning the stall inequality
/// tan(a)*c_L(a) <= c_D(a) - c_D(pi) over a in (0, pi/2).
struct StallConditionReport {
    bool satisfied = false;
    std::optional<Angle> alpha_s;       // first angle satisfying the condition
    double margin = 0.0;                // min of tan(a)*c_L - (c_D - c_D(pi)) where c_L > 0
    double cd0 = 0.0;
    double cd_pi = 0.0;
    int grid = 0;
};

/// Scans a uniform interior grid of (0, pi/2). Fails fast with
/// CdOrderingError when c_D(pi) <= c_D(0) (the theorem's standing
/// assumption does not hold).
StallConditionReport check_stall_condition(const AeroModel& model, int grid = kDefaultStallGrid);

/// Proof quantities for the symmetric, sin(delta) != 0 existence argument:
/// a_t, b_t at theta_0, the evaluators Delta_a / Lambda_b, and - when the
/// argument applies - an arc certified to contain a root of f_t.
struct ThmTwoDiagnostics {
    double a_t = 0.0;
    double b_t = 0.0;
    Angle theta0;
    double k_v2 = 0.0; // k_a * |v_ref - v_wind|^2; the product identity
                       // f(theta0-a)*f(theta0+a) = k_v2^2 * (Delta_a^2 sin^2(delta) - Lambda_b^2)
    double cd0 = 0.0;
    double cd_pi = 0.0;
    std::function<double(double)> delta_a;  // Delta_a(alpha_bar), radians in
    std::function<double(double)> lambda_b; // Lambda_b(alpha_bar)
    std::optional<Angle> alpha_s;           // stall-condition angle, if the scan applies
    std::optional<std::pair<Angle, Angle>> bracket; // CCW arc containing a root
    bool grazing_equality = false; // a Delta_a endpoint was exactly zero
};

/// Requires sin(delta) != 0 and |v_ref - v_wind| != 0 (PreconditionError
/// otherwise; those cases are covered by the theorem-1 path and by the
/// zero-airspeed argument respectively).
ThmTwoDiagnostics thm2_diagnostics(const AeroModel& model, const VehicleParams& vp,
                                   const FlightCondition& fc);

/// The passivity counterexample, reproduced end to end: delta = pi/2,
/// c_L = sin, c_D = c0 + 1 - cos, gamma_r = pi/2 with k_a*|v|^2 = 1, and
/// F_gr = (0, c0+1). Expected outcome: f_t identically 1, no equilibria,
/// passivity check passes.
struct Lemma1Report {
    double c0 = 0.0;
    double ka = 0.0;
    VehicleParams vehicle;
    FlightCondition condition;
    double f_min = 0.0;
    double f_max = 0.0;
    double max_abs_dev_from_one = 0.0; // over the scan grid
    int equilibrium_count = 0;
    bool continuum = false;
    PassivityReport passivity;
    EquilibriumSet equilibria;
};

Lemma1Report reproduce_lemma1(double c0, double ka, double m, double g);

/// Sampling ranges for randomized scenario batches: reference speed
/// uniform in [0, max_ref_speed] with uniform direction, acceleration
/// components uniform in +-accel_gravity_span*g, wind speed uniform in
/// [0, max_wind_speed] with uniform direction.
struct ScenarioDistribution {
    double max_ref_speed = 30.0;    // [m/s]
    double max_wind_speed = 10.0;   // [m/s]
    double accel_gravity_span = 2.0;
};

FlightCondition sample_flight_condition(std::mt19937_64& rng, double gravity,
                                        const ScenarioDistribution& dist = {});

/// Aggregate outcome of a randomized universally-quantified check: any
/// single violating scenario fails the whole run.
struct TheoremCheckReport {
    bool satisfied = false;
    int scenario_count = 0;
    int violation_count = 0;
    double worst_case = 0.0;  // semantics per check, see each runner
    std::string worst_detail; // human-readable worst scenario
};

/// Theorem 1 item i: every scenario must yield >= 2 transversal
/// equilibria, one in [theta0-pi, theta0] and one in [theta0, theta0+pi].
/// worst_case = minimum transversal root count seen.
TheoremCheckReport run_theorem1_item_i(const AeroModel& model, const VehicleParams& vp,
                                       int n_scenarios, std::uint64_t seed,
                                       const SolverConfig& cfg = {},
                                       const ScenarioDistribution& dist = {});

/// Theorem 1 item ii: f_t(theta+pi) == -f_t(theta) at n_theta random
/// orientations per scenario (relative to the local force scale) and the
/// positive-thrust subset must be non-empty. worst_case = largest relative
/// antisymmetry residual seen.
TheoremCheckReport run_theorem1_item_ii(const AeroModel& model, const VehicleParams& vp,
                                        int n_scenarios, std::uint64_t seed,
                                        const SolverConfig& cfg = {},
                                        const ScenarioDistribution& dist = {}, int n_theta = 100,
                                        double antisym_tol = 1e-11);

/// Theorem 2: random (delta, flight condition) pairs with sin(delta) != 0
/// must all yield at least one equilibrium. worst_case = minimum root
/// count seen.
TheoremCheckReport run_theorem2_existence(const AeroModel& model, double mass, double gravity,
                                          int n_scenarios, std::uint64_t seed,
                                          const SolverConfig& cfg = {},
                                          const ScenarioDistribution& dist = {});

} // namespace trim
