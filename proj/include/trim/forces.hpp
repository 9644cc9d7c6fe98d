#pragma once

#include <optional>

#include "trim/aero_model.hpp"
#include "trim/geometry.hpp"

namespace trim {

/// Vehicle constants. Gravity points along e1 (the VTOL-style convention):
/// theta = 0 is "hover upright" with the thrust axis i aligned to e1, and
/// the thrust force is T_vec = -T*i with scalar T.
struct VehicleParams {
    double mass;    // [kg], > 0
    double gravity; // [m/s^2], finite
    Angle delta;    // offset from zero-lift direction to thrust axis

    VehicleParams(double mass_, double gravity_, Angle delta_);
};

/// Reference velocity/acceleration and wind at one instant. `time` is a
/// label only; nothing is integrated.
struct FlightCondition {
    Vec2 v_ref{};  // reference velocity [m/s]
    Vec2 a_ref{};  // reference acceleration [m/s^2]
    Vec2 v_wind{}; // wind velocity [m/s]
    double time = 0.0;

    FlightCondition() = default;
    FlightCondition(Vec2 v_ref_, Vec2 a_ref_, Vec2 v_wind_, double time_ = 0.0);
};

struct AeroForceResult {
    Vec2 force{};
    std::optional<Angle> alpha; // empty iff airspeed is exactly zero
    std::optional<Angle> gamma;
    double airspeed = 0.0;
};

/// Apparent external force F = F_gr + F_a split into its parts, evaluated
/// at the reference velocity.
struct ForceBreakdown {
    Vec2 f_gr{};
    Vec2 f_aero{};
    Vec2 f_total{};
    std::optional<Angle> alpha;
    std::optional<Angle> gamma;
    double airspeed = 0.0;
};

/// Reference velocity relative to the air mass, v_ref - v_wind.
Vec2 relative_velocity(const FlightCondition& fc);

/// alpha = theta - gamma + pi - delta, wrapped.
Angle angle_of_attack(Angle theta, Angle gamma, Angle delta);

/// F_a = k_a*|v_a|*[c_L(alpha)*S - c_D(alpha)*I]*v_a in inertial coordinates.
/// Zero airspeed gives a zero force with alpha/gamma unset; callers that
/// need the angle must branch on that case first.
AeroForceResult aero_force(const AeroModel& model, const Vec2& x_dot_a, Angle theta, Angle delta);

/// F_gr = m*g*e1 - m*a_ref plus the aerodynamic force at v_ref - v_wind.
ForceBreakdown apparent_force(const AeroModel& model, const VehicleParams& vp,
                              const FlightCondition& fc, Angle theta);

} // namespace trim
