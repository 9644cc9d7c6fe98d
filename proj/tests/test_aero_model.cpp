#include <doctest.h>

#include <cmath>
#include <random>

#include "trim/aero_model.hpp"
#include "trim/forces.hpp"
#include "trim/polar_io.hpp"

using namespace trim;

TEST_CASE("counterexample model coefficients") {
    const AeroModel m = counterexample_model(0.1);
    auto [cl0, cd0] = eval_coeffs(m, Angle(0.0));
    CHECK(cl0 == 0.0);
    CHECK(cd0 == doctest::Approx(0.1));
    auto [clp, cdp] = eval_coeffs(m, Angle(kPi));
    CHECK(std::abs(clp) < 1e-15); // c_L(0) = c_L(pi) = 0
    CHECK(cdp == doctest::Approx(2.1));

    CHECK_THROWS_AS(counterexample_model(0.0), ValidationError);
    CHECK_THROWS_AS(counterexample_model(0.1, -1.0), ValidationError);
}

TEST_CASE("symmetry verification on the presets") {
    const AeroModel ce = counterexample_model(0.3);
    CHECK(verify_symmetry(ce).passed);
    // c_D(0) = c0 but c_D(pi) = c0 + 2: pi-periodicity fails.
    const BisymmetryReport bad = verify_bisymmetry(ce, 720, 1e-9);
    CHECK_FALSE(bad.passed);
    CHECK(bad.max_drag_period_error == doctest::Approx(2.0));

    const AeroModel fp = bisym_flat_plate_model(0.05, 1.2, 1.0);
    CHECK(verify_symmetry(fp).passed);
    CHECK(verify_bisymmetry(fp).passed);
}

TEST_CASE("bisymmetry implies symmetry for random flat plates") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.01, 3.0);
    for (int i = 0; i < 20; ++i) {
        const AeroModel m = bisym_flat_plate_model(u(rng), u(rng), u(rng));
        const BisymmetryReport r = verify_bisymmetry(m);
        CHECK(r.passed);
        CHECK(r.symmetry.passed);
    }
}

TEST_CASE("declared class is verified at construction") {
    // sin(a) + 0.2 is not odd: declaring symmetric must throw.
    CHECK_THROWS_AS(AeroModel([](double a) { return std::sin(a) + 0.2; },
                              [](double) { return 1.0; }, 1.0, SymmetryClass::Symmetric),
                    SymmetryVerificationError);
    // Same functions are fine as generic.
    CHECK_NOTHROW(AeroModel([](double a) { return std::sin(a) + 0.2; },
                            [](double) { return 1.0; }, 1.0, SymmetryClass::Generic));
    // Non-finite coefficients are rejected up front.
    CHECK_THROWS_AS(AeroModel([](double) { return std::nan(""); }, [](double) { return 1.0; },
                              1.0, SymmetryClass::Generic),
                    ModelEvaluationError);
}

TEST_CASE("perturbed table is flagged with the offending alpha") {
    PolarTable t;
    for (int d = 0; d <= 180; d += 5) {
        t.alpha_deg.push_back(d);
        t.cl.push_back(std::sin(d * kPi / 180.0) * std::cos(d * kPi / 180.0));
        t.cd.push_back(0.02 + std::pow(std::sin(d * kPi / 180.0), 2));
    }
    PolarTable full = extend_symmetric(t);
    // Defect on one side only, at alpha = +30 deg (mirroring would hide it).
    for (std::size_t i = 0; i < full.size(); ++i)
        if (full.alpha_deg[i] == 30.0)
            full.cl[i] += 0.01;
    const AeroModel m = build_model(full, 1.0, SymmetryClass::Generic);
    const SymmetryReport r = verify_symmetry(m, 720, 1e-6);
    CHECK_FALSE(r.passed);
    CHECK(std::abs(std::abs(r.worst_alpha) - 30.0 * kPi / 180.0) < 2.0 * kPi / 180.0);
}

TEST_CASE("passivity reduces to nonnegative drag") {
    const PassivityReport ok = check_passivity(counterexample_model(0.1));
    CHECK(ok.passed);
    CHECK(ok.min_drag == doctest::Approx(0.1));
    CHECK(std::abs(ok.alpha_at_min) < 1e-9); // minimum at alpha = 0

    const AeroModel bad([](double a) { return std::sin(a); }, [](double) { return -1.0; }, 1.0,
                        SymmetryClass::Generic);
    CHECK_FALSE(check_passivity(bad).passed);
}

TEST_CASE("power extracted by the aerodynamic force equals -ka*cd*|v|^3") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    const AeroModel m = counterexample_model(0.25, 0.8);
    for (int i = 0; i < 500; ++i) {
        const Vec2 v{u(rng), u(rng)};
        if (v.is_zero())
            continue;
        const Angle theta(u(rng)), delta(u(rng));
        const AeroForceResult r = aero_force(m, v, theta, delta);
        const double cd = m.drag(*r.alpha);
        const double lhs = v.dot(r.force);
        const double rhs = -m.ka() * cd * std::pow(v.norm(), 3);
        const double scale = m.ka() * (std::abs(m.lift(*r.alpha)) + cd) * std::pow(v.norm(), 3);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, scale));
    }
}
