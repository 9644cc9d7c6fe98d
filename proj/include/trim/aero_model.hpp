#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "trim/geometry.hpp"

namespace trim {

/// Shape-symmetry class of the aerodynamic characteristics. Declared by the
/// constructor and verified numerically; never inferred from data.
enum class SymmetryClass { Generic, Symmetric, Bisymmetric };

const char* to_string(SymmetryClass c);
SymmetryClass symmetry_class_from_string(std::string_view s);

struct AeroMetadata {
    std::string name;
    std::optional<double> rho;      // free stream air density [kg/m^3]
    std::optional<double> sigma;    // characteristic surface [m^2]
    std::optional<double> reynolds;
    std::optional<double> mach;
};

/// Aerodynamic characteristics c_L(alpha), c_D(alpha) with k_a = rho*Sigma/2.
/// The evaluators take the canonical angle of attack in radians, (-pi, pi].
///
/// Construction verifies the declared symmetry class at `symmetry_tol`
/// (1e-9 suits analytic models, 1e-6 interpolated tables) and probes a few
/// angles for finite values. Models are immutable afterwards; evaluation is
/// pure and safe to call concurrently.
class AeroModel {
public:
    using Coefficient = std::function<double(double)>;

    AeroModel(Coefficient lift, Coefficient drag, double ka, SymmetryClass symmetry_class,
              AeroMetadata metadata = {}, double symmetry_tol = 1e-9);

    /// Raw coefficient evaluation; no finiteness check (see eval_coeffs).
    double lift(Angle alpha) const { return lift_(alpha.radians()); }
    double drag(Angle alpha) const { return drag_(alpha.radians()); }

    double ka() const { return ka_; }
    SymmetryClass symmetry_class() const { return symmetry_class_; }
    const AeroMetadata& metadata() const { return metadata_; }
    double symmetry_tol() const { return symmetry_tol_; }

private:
    Coefficient lift_;
    Coefficient drag_;
    double ka_;
    SymmetryClass symmetry_class_;
    AeroMetadata metadata_;
    double symmetry_tol_;
};

/// The passive-but-equilibrium-free construction: c_L = sin(alpha),
/// c_D = c0 + 1 - cos(alpha), c0 > 0. Symmetric, not bisymmetric.
AeroModel counterexample_model(double c0, double ka = 1.0);

/// Minimal bisymmetric family: c_L = c1*sin(alpha)*cos(alpha),
/// c_D = c0 + c2*sin^2(alpha), with c0 > 0, c1 >= 0, c2 >= 0.
AeroModel bisym_flat_plate_model(double c0, double c1, double c2, double ka = 1.0);

/// (c_L(alpha), c_D(alpha)); throws ModelEvaluationError on non-finite output.
std::pair<double, double> eval_coeffs(const AeroModel& model, Angle alpha);

inline constexpr int kDefaultSymmetrySamples = 720; // 0.5 deg grid

struct SymmetryReport {
    bool passed = false;
    double max_drag_even_error = 0.0; // max |c_D(a) - c_D(-a)|
    double max_lift_odd_error = 0.0;  // max |c_L(a) + c_L(-a)|
    double lift_at_zero = 0.0;        // |c_L(0)|
    double lift_at_pi = 0.0;          // |c_L(pi)|
    double worst_alpha = 0.0;         // radians, site of the largest violation
    double tol = 0.0;
    int samples = 0;
};

struct BisymmetryReport {
    bool passed = false;
    double max_drag_period_error = 0.0; // max |c_D(a) - c_D(a+pi)|
    double max_lift_period_error = 0.0; // max |c_L(a) - c_L(a+pi)|
    double worst_alpha = 0.0;
    SymmetryReport symmetry; // pi-periodicity subsumes the mirror identities
    double tol = 0.0;
    int samples = 0;
};

struct PassivityReport {
    bool passed = false;
    double min_drag = 0.0;
    double alpha_at_min = 0.0; // radians
    int samples = 0;
};

/// Checks the mirror identities c_D even / c_L odd plus c_L(0) = c_L(pi) = 0
/// on a uniform grid of n_samples over (-pi, pi].
SymmetryReport verify_symmetry(const AeroModel& model, int n_samples, double tol);
SymmetryReport verify_symmetry(const AeroModel& model);

/// Checks pi-periodicity of both coefficients; passes only if
/// verify_symmetry passes as well.
BisymmetryReport verify_bisymmetry(const AeroModel& model, int n_samples, double tol);
BisymmetryReport verify_bisymmetry(const AeroModel& model);

/// Passivity of the aerodynamic force reduces to c_D(alpha) >= 0 for all
/// alpha (the airspeed term along S contributes nothing to the power).
PassivityReport check_passivity(const AeroModel& model, int n_samples = kDefaultSymmetrySamples);

} // namespace trim
