#include "trim/aero_model.hpp"

#include <cmath>
#include <limits>

namespace trim {

const char* to_string(SymmetryClass c) {
    switch (c) {
    case SymmetryClass::Generic: return "generic";
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::Bisymmetric: return "bisymmetric";
    }
    return "?";
}

SymmetryClass symmetry_class_from_string(std::string_view s) {
    if (s == "generic") return SymmetryClass::Generic;
    if (s == "symmetric") return SymmetryClass::Symmetric;
    if (s == "bisymmetric") return SymmetryClass::Bisymmetric;
    throw ValidationError("unknown symmetry class: " + std::string(s));
}

AeroModel::AeroModel(Coefficient lift, Coefficient drag, double ka, SymmetryClass symmetry_class,
                     AeroMetadata metadata, double symmetry_tol)
    : lift_(std::move(lift)),
      drag_(std::move(drag)),
      ka_(ka),
      symmetry_class_(symmetry_class),
      metadata_(std::move(metadata)),
      symmetry_tol_(symmetry_tol) {
    if (!lift_ || !drag_)
        throw ValidationError("AeroModel: empty coefficient function");
    if (!(ka_ > 0.0) || !std::isfinite(ka_))
        throw ValidationError("AeroModel: ka must be positive and finite");
    if (!(symmetry_tol_ > 0.0))
        throw ValidationError("AeroModel: symmetry_tol must be positive");

    for (double probe : {0.0, 0.5 * kPi, -0.5 * kPi, kPi, 1.0}) {
        if (!std::isfinite(lift_(probe)) || !std::isfinite(drag_(probe)))
            throw ModelEvaluationError("AeroModel: non-finite coefficient at probe angle");
    }

    if (symmetry_class_ == SymmetryClass::Symmetric) {
        const SymmetryReport r = verify_symmetry(*this);
        if (!r.passed)
            throw SymmetryVerificationError(
                "declared symmetric but mirror identities fail near alpha = " +
                std::to_string(r.worst_alpha) + " rad");
    } else if (symmetry_class_ == SymmetryClass::Bisymmetric) {
        const BisymmetryReport r = verify_bisymmetry(*this);
        if (!r.passed)
            throw SymmetryVerificationError(
                "declared bisymmetric but periodicity/mirror identities fail near alpha = " +
                std::to_string(r.worst_alpha) + " rad");
    }
}

AeroModel counterexample_model(double c0, double ka) {
    if (!(c0 > 0.0))
        throw ValidationError("counterexample_model: c0 must be > 0");
    AeroMetadata meta;
    meta.name = "counterexample(c0=" + std::to_string(c0) + ")";
    return AeroModel([](double a) { return std::sin(a); },
                     [c0](double a) { return c0 + 1.0 - std::cos(a); }, ka,
                     SymmetryClass::Symmetric, std::move(meta));
}

AeroModel bisym_flat_plate_model(double c0, double c1, double c2, double ka) {
    if (!(c0 > 0.0))
        throw ValidationError("bisym_flat_plate_model: c0 must be > 0");
    if (c1 < 0.0 || c2 < 0.0)
        throw ValidationError("bisym_flat_plate_model: c1 and c2 must be >= 0");
    AeroMetadata meta;
    meta.name = "bisym_flat_plate(c0=" + std::to_string(c0) + ",c1=" + std::to_string(c1) +
                ",c2=" + std::to_string(c2) + ")";
    return AeroModel([c1](double a) { return c1 * std::sin(a) * std::cos(a); },
                     [c0, c2](double a) {
                         const double s = std::sin(a);
                         return c0 + c2 * s * s;
                     },
                     ka, SymmetryClass::Bisymmetric, std::move(meta));
}

std::pair<double, double> eval_coeffs(const AeroModel& model, Angle alpha) {
    const double cl = model.lift(alpha);
    const double cd = model.drag(alpha);
    if (!std::isfinite(cl) || !std::isfinite(cd))
        throw ModelEvaluationError("coefficients non-finite at alpha = " +
                                   std::to_string(alpha.radians()) + " rad");
    return {cl, cd};
}

namespace {

// Uniform grid over (-pi, pi], k = 1..n.
double grid_angle(int k, int n) { return -kPi + kTwoPi * static_cast<double>(k) / n; }

} // namespace

SymmetryReport verify_symmetry(const AeroModel& model, int n_samples, double tol) {
    if (n_samples < 2)
        throw PreconditionError("verify_symmetry: n_samples must be >= 2");
    SymmetryReport r;
    r.tol = tol;
    r.samples = n_samples;
    double worst = -1.0;
    for (int k = 1; k <= n_samples; ++k) {
        const Angle a = wrap(grid_angle(k, n_samples));
        const Angle ma = wrap(-a.radians());
        const double de = std::abs(model.drag(a) - model.drag(ma));
        const double le = std::abs(model.lift(a) + model.lift(ma));
        r.max_drag_even_error = std::max(r.max_drag_even_error, de);
        r.max_lift_odd_error = std::max(r.max_lift_odd_error, le);
        if (std::max(de, le) > worst) {
            worst = std::max(de, le);
            r.worst_alpha = a.radians();
        }
    }
    r.lift_at_zero = std::abs(model.lift(Angle(0.0)));
    r.lift_at_pi = std::abs(model.lift(Angle(kPi)));
    r.passed = r.max_drag_even_error <= tol && r.max_lift_odd_error <= tol &&
               r.lift_at_zero <= tol && r.lift_at_pi <= tol;
    return r;
}

SymmetryReport verify_symmetry(const AeroModel& model) {
    return verify_symmetry(model, kDefaultSymmetrySamples, model.symmetry_tol());
}

BisymmetryReport verify_bisymmetry(const AeroModel& model, int n_samples, double tol) {
    if (n_samples < 2)
        throw PreconditionError("verify_bisymmetry: n_samples must be >= 2");
    BisymmetryReport r;
    r.tol = tol;
    r.samples = n_samples;
    double worst = -1.0;
    for (int k = 1; k <= n_samples; ++k) {
        const Angle a = wrap(grid_angle(k, n_samples));
        const Angle ap = wrap(a.radians() + kPi);
        const double de = std::abs(model.drag(a) - model.drag(ap));
        const double le = std::abs(model.lift(a) - model.lift(ap));
        r.max_drag_period_error = std::max(r.max_drag_period_error, de);
        r.max_lift_period_error = std::max(r.max_lift_period_error, le);
        if (std::max(de, le) > worst) {
            worst = std::max(de, le);
            r.worst_alpha = a.radians();
        }
    }
    r.symmetry = verify_symmetry(model, n_samples, tol);
    r.passed = r.max_drag_period_error <= tol && r.max_lift_period_error <= tol &&
               r.symmetry.passed;
    return r;
}

BisymmetryReport verify_bisymmetry(const AeroModel& model) {
    return verify_bisymmetry(model, kDefaultSymmetrySamples, model.symmetry_tol());
}

PassivityReport check_passivity(const AeroModel& model, int n_samples) {
    if (n_samples < 2)
        throw PreconditionError("check_passivity: n_samples must be >= 2");
    PassivityReport r;
    r.samples = n_samples;
    r.min_drag = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n_samples; ++k) {
        const Angle a = wrap(grid_angle(k, n_samples));
        const double cd = model.drag(a);
        if (cd < r.min_drag) {
            r.min_drag = cd;
            r.alpha_at_min = a.radians();
        }
    }
    r.passed = r.min_drag >= 0.0;
    return r;
}

} // namespace trim
