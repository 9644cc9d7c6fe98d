#include "trim/forces.hpp"

#include <cmath>

namespace trim {

VehicleParams::VehicleParams(double mass_, double gravity_, Angle delta_)
    : mass(mass_), gravity(gravity_), delta(delta_) {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ValidationError("VehicleParams: mass must be positive and finite");
    if (!std::isfinite(gravity))
        throw ValidationError("VehicleParams: gravity must be finite");
}

FlightCondition::FlightCondition(Vec2 v_ref_, Vec2 a_ref_, Vec2 v_wind_, double time_)
    : v_ref(v_ref_), a_ref(a_ref_), v_wind(v_wind_), time(time_) {
    if (!v_ref.finite() || !a_ref.finite() || !v_wind.finite() || !std::isfinite(time))
        throw ValidationError("FlightCondition: non-finite component");
}

Vec2 relative_velocity(const FlightCondition& fc) { return fc.v_ref - fc.v_wind; }

Angle angle_of_attack(Angle theta, Angle gamma, Angle delta) {
    return wrap(theta.radians() - gamma.radians() + kPi - delta.radians());
}

AeroForceResult aero_force(const AeroModel& model, const Vec2& x_dot_a, Angle theta, Angle delta) {
    AeroForceResult out;
    if (x_dot_a.is_zero())
        return out; // |v_a| = 0: no force, no angle of attack

    out.airspeed = x_dot_a.norm();
    const Angle gamma = atan2_angle(x_dot_a);
    const Angle alpha = angle_of_attack(theta, gamma, delta);
    const auto [cl, cd] = eval_coeffs(model, alpha);

    const Vec2 perp = kSkew * x_dot_a;
    out.force = model.ka() * out.airspeed * (cl * perp - cd * x_dot_a);
    out.alpha = alpha;
    out.gamma = gamma;
    return out;
}

ForceBreakdown apparent_force(const AeroModel& model, const VehicleParams& vp,
                              const FlightCondition& fc, Angle theta) {
    ForceBreakdown out;
    out.f_gr = vp.mass * vp.gravity * kE1 - vp.mass * fc.a_ref;

    const AeroForceResult aero = aero_force(model, relative_velocity(fc), theta, vp.delta);
    out.f_aero = aero.force;
    out.alpha = aero.alpha;
    out.gamma = aero.gamma;
    out.airspeed = aero.airspeed;
    out.f_total = out.f_gr + out.f_aero;
    return out;
}

} // namespace trim
