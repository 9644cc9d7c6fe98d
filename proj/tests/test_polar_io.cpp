#include <doctest.h>

#include <cmath>
#include <random>

#include "trim/polar_io.hpp"

using namespace trim;

#ifndef TRIM_REPO_DIR
#define TRIM_REPO_DIR "."
#endif

namespace {

const std::string kNaca0021 = std::string(TRIM_REPO_DIR) + "/data/polars/naca0021.csv";

PolarTable flat_plate_quarter() {
    // Exact bisymmetric data on [0, 90]: cl = sin(2a), cd = 0.02 + 1.8 sin^2(a).
    PolarTable t;
    for (int d = 0; d <= 90; d += 3) {
        const double a = d * kPi / 180.0;
        t.alpha_deg.push_back(d);
        t.cl.push_back(std::sin(2.0 * a));
        t.cd.push_back(0.02 + 1.8 * std::sin(a) * std::sin(a));
    }
    return t;
}

} // namespace

TEST_CASE("parse a minimal polar") {
    const PolarTable t = parse_polar_csv("alpha_deg,cl,cd\n0,0,0.01\n10,0.8,0.02\n20,0.6,0.2\n");
    REQUIRE(t.size() == 3);
    CHECK(t.alpha_deg[1] == 10.0);
    CHECK(t.cl[2] == 0.6);
    CHECK_FALSE(t.coverage().has_value()); // [0, 20] is none of the supported classes
}

TEST_CASE("parse metadata and sorting") {
    const PolarTable t = parse_polar_csv("# name=demo foil\n# Re=1e5\n# M=0.3\n"
                                         "# free-form comment\n"
                                         "alpha_deg,cl,cd\n20,0.6,0.2\n0,0,0.01\n10,0.8,0.02\n");
    CHECK(t.name == "demo foil");
    CHECK(*t.reynolds == doctest::Approx(1e5));
    CHECK(*t.mach == doctest::Approx(0.3));
    CHECK(t.alpha_deg == std::vector<double>{0.0, 10.0, 20.0});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_polar_csv("alpha,cl,cd\n0,0,0.01\n"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_polar_csv("alpha_deg,cl,cd\n0,0\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_polar_csv("alpha_deg,cl,cd\n0,zero,0.01\n"),
                         doctest::Contains("line 2"), ParseError);
    // cd <= 0 names the offending row.
    CHECK_THROWS_WITH_AS(parse_polar_csv("alpha_deg,cl,cd\n0,0,0.01\n10,0.8,-0.1\n"),
                         doctest::Contains("alpha = 10"), ValidationError);
    CHECK_THROWS_AS(parse_polar_csv("alpha_deg,cl,cd\n0,0,0.01\n0,0.1,0.02\n"), ValidationError);
    CHECK_THROWS_AS(parse_polar_csv(""), ParseError);
}

TEST_CASE("bundled NACA 0021 fixture loads as written") {
    const PolarTable t = load_polar_csv(kNaca0021);
    REQUIRE(t.size() == 181);
    CHECK(t.name == "NACA 0021");
    CHECK(*t.reynolds == 160000.0);
    CHECK(*t.mach == 0.3);
    // End rows, byte-for-byte from the fixture file.
    CHECK(t.alpha_deg.front() == 0.0);
    CHECK(t.cl.front() == 0.0);
    CHECK(t.cd.front() == 0.0145);
    CHECK(t.alpha_deg.back() == 180.0);
    CHECK(t.cl.back() == 0.0);
    CHECK(t.cd.back() == 0.036);
    CHECK(t.coverage() == PolarCoverage::ZeroTo180);
}

TEST_CASE("symmetric extension mirrors rows") {
    PolarTable t = parse_polar_csv("alpha_deg,cl,cd\n0,0,0.01\n10,0.8,0.02\n180,0,0.05\n");
    const PolarTable full = extend_symmetric(t);
    REQUIRE(full.size() == 5);
    CHECK(full.alpha_deg == std::vector<double>{-180.0, -10.0, 0.0, 10.0, 180.0});
    CHECK(full.cl[1] == -0.8); // mirrored row of (10, 0.8, 0.02)
    CHECK(full.cd[1] == 0.02);
    CHECK(full.cl[2] == 0.0);  // alpha = 0 row kept once
    CHECK(full.coverage() == PolarCoverage::FullCircle);

    CHECK_THROWS_AS(extend_symmetric(full), RangeError);        // already full circle
    PolarTable quarter = flat_plate_quarter();
    CHECK_THROWS_AS(extend_symmetric(quarter), RangeError);     // [0, 90] is too short
}

TEST_CASE("symmetric extension of the NACA table verifies, bisymmetric fails") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const PolarTable full = extend_symmetric(t);
    const AeroModel m = build_model(full, 0.37, SymmetryClass::Symmetric);
    CHECK(verify_symmetry(m, 720, 1e-6).passed);
    // An actual airfoil is not fore-aft symmetric: cd(0) != cd(pi).
    CHECK_FALSE(verify_bisymmetry(m, 720, 1e-6).passed);
}

TEST_CASE("bisymmetric extension composes periodicity and parity") {
    PolarTable t = parse_polar_csv("alpha_deg,cl,cd\n0,0,0.02\n30,0.9,0.3\n60,0.8,1.1\n90,0,1.8\n");
    const PolarTable full = extend_bisymmetric(t);
    CHECK(full.coverage() == PolarCoverage::FullCircle);

    auto value_at = [&](double a) {
        for (std::size_t i = 0; i < full.size(); ++i)
            if (full.alpha_deg[i] == a)
                return std::pair{full.cl[i], full.cd[i]};
        FAIL("missing node ", a);
        return std::pair{0.0, 0.0};
    };
    // (30, 0.9, 0.3) maps to (-150, 0.9, 0.3) by periodicity and to
    // (150, -0.9, 0.3) by periodicity + parity.
    CHECK(value_at(-150.0) == std::pair{0.9, 0.3});
    CHECK(value_at(150.0) == std::pair{-0.9, 0.3});
    // 90 and -90 carry the same coefficients.
    CHECK(value_at(-90.0) == value_at(90.0));

    CHECK_THROWS_AS(extend_bisymmetric(full), RangeError);
}

TEST_CASE("bisymmetric extension of exact flat-plate data verifies") {
    const PolarTable full = extend_bisymmetric(flat_plate_quarter());
    const AeroModel m = build_model(full, 1.0, SymmetryClass::Bisymmetric);
    CHECK(verify_bisymmetry(m, 720, 1e-6).passed);
}

TEST_CASE("interpolation identities") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const AeroModel m = build_model(extend_symmetric(t), 0.37, SymmetryClass::Symmetric);

    // Grid nodes evaluate exactly to the table values.
    auto [cl0, cd0] = eval_coeffs(m, Angle(0.0));
    CHECK(cl0 == 0.0);
    CHECK(cd0 == 0.0145); // c_D(0) straight from the CSV row
    auto [cl20, cd20] = eval_coeffs(m, Angle::from_degrees(20.0));
    CHECK(cl20 == doctest::Approx(0.634738).epsilon(1e-12));
    CHECK(cd20 == doctest::Approx(0.287492).epsilon(1e-12));

    // Midway between nodes: the arithmetic mean of the neighbors.
    auto [cl_mid, cd_mid] = eval_coeffs(m, Angle::from_degrees(20.5));
    CHECK(cl_mid == doctest::Approx(0.5 * (0.634738 + 0.622282)).epsilon(1e-9));
    CHECK(cd_mid == doctest::Approx(0.5 * (0.287492 + 0.340532)).epsilon(1e-9));

    // Around the post-stall drop the interpolant stays between the rows.
    auto [cl_a, cd_a] = eval_coeffs(m, Angle::from_degrees(16.4));
    CHECK(cl_a <= 1.024793);
    CHECK(cl_a >= 0.939780);
    CHECK(cd_a >= 0.077979);
    CHECK(cd_a <= 0.118622);
}

TEST_CASE("ingested NACA table is passive") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const AeroModel m = build_model(extend_symmetric(t), 0.37, SymmetryClass::Symmetric);
    const PassivityReport r = check_passivity(m);
    CHECK(r.passed);
    CHECK(r.min_drag > 0.0);
}

TEST_CASE("interpolated drag stays positive") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const AeroModel m = build_model(extend_symmetric(t), 0.37, SymmetryClass::Symmetric);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 2000; ++i)
        CHECK(m.drag(wrap(u(rng))) > 0.0);
}

TEST_CASE("declared class must verify for tabulated models") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const PolarTable full = extend_symmetric(t);
    CHECK_THROWS_AS(build_model(full, 0.37, SymmetryClass::Bisymmetric),
                    SymmetryVerificationError);
    CHECK_THROWS_AS(build_model(t, 0.37, SymmetryClass::Symmetric), RangeError);
    CHECK_THROWS_AS(build_model(full, -1.0, SymmetryClass::Symmetric), ValidationError);
}

TEST_CASE("serialize round trip preserves the numbers") {
    const PolarTable t = load_polar_csv(kNaca0021);
    const PolarTable back = parse_polar_csv(write_polar_csv(t));
    REQUIRE(back.size() == t.size());
    CHECK(back.alpha_deg == t.alpha_deg);
    CHECK(back.cl == t.cl);
    CHECK(back.cd == t.cd);
    CHECK(back.name == t.name);
    CHECK(*back.reynolds == *t.reynolds);

    // Also exercise a table with awkward doubles.
    PolarTable odd;
    odd.alpha_deg = {0.0, 0.1 + 0.2, 180.0};
    odd.cl = {0.0, 1.0 / 3.0, 0.0};
    odd.cd = {1e-300, 0.123456789012345678, 2.5};
    const PolarTable odd_back = parse_polar_csv(write_polar_csv(odd));
    CHECK(odd_back.alpha_deg == odd.alpha_deg);
    CHECK(odd_back.cl == odd.cl);
    CHECK(odd_back.cd == odd.cd);
}
