#pragma once

#include <cmath>
#include <numbers>

#include "trim/errors.hpp"

namespace trim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar vector in inertial coordinates (e1, e2). By the VTOL-style
/// convention used throughout, gravity points along e1.
struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double a, double b) : x1(a), x2(b) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x1 + r.x1, x2 + r.x2}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x1 - r.x1, x2 - r.x2}; }
    constexpr Vec2 operator-() const { return {-x1, -x2}; }
    constexpr Vec2 operator*(double s) const { return {x1 * s, x2 * s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

    constexpr double dot(const Vec2& r) const { return x1 * r.x1 + x2 * r.x2; }
    constexpr double norm_sq() const { return x1 * x1 + x2 * x2; }
    double norm() const { return std::hypot(x1, x2); }

    constexpr bool is_zero() const { return x1 == 0.0 && x2 == 0.0; }
    bool finite() const { return std::isfinite(x1) && std::isfinite(x2); }
};

inline constexpr Vec2 kE1{1.0, 0.0};
inline constexpr Vec2 kE2{0.0, 1.0};

/// Angle in radians, kept canonical in (-pi, pi]. -pi wraps to +pi.
class Angle {
public:
    constexpr Angle() = default;

    /// Wraps into (-pi, pi]. Rejects non-finite input.
    explicit Angle(double radians) {
        if (!std::isfinite(radians))
            throw ValidationError("Angle: non-finite value");
        double r = std::remainder(radians, kTwoPi); // [-pi, pi]
        value_ = (r <= -kPi) ? kPi : r;
    }

    static Angle from_degrees(double deg) { return Angle(deg * (kPi / 180.0)); }

    constexpr double radians() const { return value_; }
    constexpr double degrees() const { return value_ * (180.0 / kPi); }

    friend constexpr bool operator==(Angle, Angle) = default;

private:
    double value_ = 0.0;
};

/// Canonical representative of theta mod 2*pi in (-pi, pi].
inline Angle wrap(double theta) { return Angle(theta); }

/// 2x2 matrix, row-major.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    constexpr Vec2 operator*(const Vec2& v) const {
        return {a11 * v.x1 + a12 * v.x2, a21 * v.x1 + a22 * v.x2};
    }
    constexpr Mat2 operator*(const Mat2& m) const {
        return {a11 * m.a11 + a12 * m.a21, a11 * m.a12 + a12 * m.a22,
                a21 * m.a11 + a22 * m.a21, a21 * m.a12 + a22 * m.a22};
    }
    constexpr Mat2 transposed() const { return {a11, a21, a12, a22}; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
};

/// Rotation by theta; columns are the body axes i, j in inertial coordinates.
inline Mat2 rotation(Angle theta) {
    const double c = std::cos(theta.radians());
    const double s = std::sin(theta.radians());
    return {c, -s, s, c};
}

/// The unitary skew-symmetric matrix R(pi/2), exact.
inline constexpr Mat2 kSkew{0.0, -1.0, 1.0, 0.0};

/// Direction angle of v measured from e1, i.e. atan2(x2, x1).
inline Angle atan2_angle(const Vec2& v) {
    if (v.is_zero())
        throw ZeroVectorError("atan2_angle: zero vector has no direction");
    return wrap(std::atan2(v.x2, v.x1));
}

} // namespace trim
