#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trim/forces.hpp"

namespace trim {

enum class Transversality { SignChange, Grazing };

const char* to_string(Transversality t);

/// One equilibrium orientation. `bracket` is the scan arc that produced it,
/// read counterclockwise from first to second; for SignChange roots the
/// bracket certifies a sign change of f_t (intermediate value theorem),
/// for Grazing roots it only localizes a |f_t| minimum.
struct Equilibrium {
    Angle theta_e;
    double thrust = 0.0; // T_e = F^T R(theta_e) e1
    Transversality transversality = Transversality::SignChange;
    std::pair<Angle, Angle> bracket{};
    double residual = 0.0; // |f_t(theta_e)|
};

struct ScanSample {
    double theta = 0.0;
    double f = 0.0;
};

/// All equilibrium orientations found on the circle at one instant.
/// `continuum` flags the degenerate case f_t == 0 everywhere (apparent
/// force identically zero, e.g. free fall matching the wind); the roots
/// list is left empty then.
struct EquilibriumSet {
    std::vector<Equilibrium> roots; // sorted by theta_e
    bool continuum = false;
    double max_abs_f = 0.0;         // max |f_t| over the scan
    std::vector<ScanSample> scan;   // filled when cfg.record_scan
};

/// Scan-and-refine configuration. The two *_tol factors are relative:
/// grazing threshold = grazing_tol * (1 + max|f_t| over the scan),
/// continuum threshold = continuum_tol * m*|g| (or continuum_tol when
/// m*|g| == 0), root acceptance = root_tol * (1 + max|f_t|).
struct SolverConfig {
    int scan_points = 3600;    // uniform samples over (-pi, pi]
    double theta_tol = 1e-10;  // bisection bracket width [rad]
    double grazing_tol = 1e-7; // tangential-zero detection factor
    double continuum_tol = 1e-9;
    double root_tol = 1e-9;    // residual acceptance factor for refined roots
    double merge_tol = 1e-6;   // duplicate-root merge distance [rad]
    bool record_scan = false;

    void validate() const; // throws PreconditionError
};

/// f_t(theta) = F^T(v_ref(t), theta, t) R(theta) e2. Equilibrium
/// orientations are exactly its zeros.
double f_theta(const AeroModel& model, const VehicleParams& vp, const FlightCondition& fc,
               Angle theta);

/// T_e = F^T R(theta) e1. Positive thrust acts along -i, per the
/// convention stated in VehicleParams.
double equilibrium_thrust(const AeroModel& model, const VehicleParams& vp,
                          const FlightCondition& fc, Angle theta);

/// Dense uniform scan of f_t over (-pi, pi] followed by bisection of every
/// sign change; |f_t| minima without a sign change below the grazing
/// threshold are refined and reported as Grazing. Deterministic and
/// independent of evaluation order. An empty root set is a valid result.
EquilibriumSet find_equilibria(const AeroModel& model, const VehicleParams& vp,
                               const FlightCondition& fc, const SolverConfig& cfg = {});

/// Subset with thrust >= 0 (the set Theta+).
EquilibriumSet positive_thrust_subset(const EquilibriumSet& eqs);

/// The orientation at which the reference angle of attack vanishes,
/// theta_0 = gamma_r - pi + delta. Empty when |v_ref - v_wind| = 0.
std::optional<Angle> theta_zero(const FlightCondition& fc, Angle delta);

} // namespace trim
