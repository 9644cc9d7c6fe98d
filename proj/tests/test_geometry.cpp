#include <doctest.h>

#include <random>

#include "trim/geometry.hpp"

using namespace trim;

TEST_CASE("rotation basics") {
    const Mat2 r0 = rotation(Angle(0.0));
    CHECK(r0.a11 == doctest::Approx(1.0));
    CHECK(r0.a12 == doctest::Approx(0.0));
    CHECK(r0.a21 == doctest::Approx(0.0));
    CHECK(r0.a22 == doctest::Approx(1.0));

    // R(pi/2) is the unitary skew-symmetric matrix S: columns (0,1), (-1,0).
    const Mat2 s = rotation(Angle(kPi / 2));
    CHECK(std::abs(s.a11 - kSkew.a11) < 1e-15);
    CHECK(std::abs(s.a12 - kSkew.a12) < 1e-15);
    CHECK(std::abs(s.a21 - kSkew.a21) < 1e-15);
    CHECK(std::abs(s.a22 - kSkew.a22) < 1e-15);

    const Mat2 r = rotation(Angle(0.37));
    const Mat2 rrt = r * r.transposed();
    CHECK(std::abs(rrt.a11 - 1.0) < 1e-14);
    CHECK(std::abs(rrt.a12) < 1e-14);
    CHECK(std::abs(rrt.a21) < 1e-14);
    CHECK(std::abs(rrt.a22 - 1.0) < 1e-14);
    CHECK(r.det() == doctest::Approx(1.0));
}

TEST_CASE("rotation composition and S conjugation") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const Angle a(u(rng)), b(u(rng));
        const Mat2 lhs = rotation(wrap(a.radians() + b.radians()));
        const Mat2 rhs = rotation(a) * rotation(b);
        CHECK(std::abs(lhs.a11 - rhs.a11) < 1e-13);
        CHECK(std::abs(lhs.a12 - rhs.a12) < 1e-13);
        CHECK(std::abs(lhs.a21 - rhs.a21) < 1e-13);
        CHECK(std::abs(lhs.a22 - rhs.a22) < 1e-13);

        const Mat2 conj = rotation(a).transposed() * kSkew * rotation(a);
        CHECK(std::abs(conj.a11 - kSkew.a11) < 1e-13);
        CHECK(std::abs(conj.a12 - kSkew.a12) < 1e-13);
        CHECK(std::abs(conj.a21 - kSkew.a21) < 1e-13);
        CHECK(std::abs(conj.a22 - kSkew.a22) < 1e-13);
    }
}

TEST_CASE("wrap canonicalization") {
    CHECK(wrap(3.0 * kPi).radians() == doctest::Approx(kPi));
    CHECK(wrap(-kPi).radians() == kPi);
    CHECK(wrap(0.5).radians() == 0.5);
    CHECK(wrap(kPi).radians() == kPi);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        const double w = wrap(x).radians();
        CHECK(w > -kPi);
        CHECK(w <= kPi);
        CHECK(wrap(w).radians() == w); // idempotent
        CHECK(std::abs(std::remainder(w - x, kTwoPi)) < 1e-9);
    }

    CHECK_THROWS_AS(wrap(std::numeric_limits<double>::quiet_NaN()), ValidationError);
    CHECK_THROWS_AS(wrap(std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("atan2_angle") {
    CHECK(atan2_angle({1.0, 0.0}).radians() == doctest::Approx(0.0));
    CHECK(atan2_angle({0.0, 1.0}).radians() == doctest::Approx(kPi / 2));
    CHECK(atan2_angle({-1.0, 0.0}).radians() == doctest::Approx(kPi));
    CHECK_THROWS_AS(atan2_angle({0.0, 0.0}), ZeroVectorError);
}

TEST_CASE("degrees round trip") {
    CHECK(Angle::from_degrees(180.0).radians() == doctest::Approx(kPi));
    CHECK(Angle::from_degrees(-90.0).degrees() == doctest::Approx(-90.0));
}
