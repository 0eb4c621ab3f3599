#include "usv/sim/dynamics.hpp"

#include <stdexcept>

namespace usv::sim {

VesselState step_dynamics(const VesselState& state, const ThrustCommand& cmd,
                          double dt, const DynamicsParams& params) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("step_dynamics: dt must be positive and finite");
  }
  if (!finite(state.pose.x) || !finite(state.pose.y) || !finite(state.pose.yaw) ||
      !finite(state.surge) || !finite(state.yaw_rate) ||
      !finite(cmd.left) || !finite(cmd.right)) {
    throw std::invalid_argument("step_dynamics: non-finite input");
  }

  ThrustCommand c = cmd.clamped();

  double surge_acc =
      (params.thrust_gain * 0.5 * (c.left + c.right) - params.drag_surge * state.surge) /
      params.mass_eff;
  double yaw_acc =
      (params.turn_gain * (c.right - c.left) - params.drag_yaw * state.yaw_rate) /
      params.inertia_eff;

  VesselState next;
  next.surge = clamp(state.surge + surge_acc * dt, -params.surge_max, params.surge_max);
  next.yaw_rate =
      clamp(state.yaw_rate + yaw_acc * dt, -params.yaw_rate_max, params.yaw_rate_max);

  // Semi-implicit: pose integrates the updated velocities.
  next.pose.yaw = wrap_angle(state.pose.yaw + next.yaw_rate * dt);
  next.pose.x = state.pose.x + next.surge * std::cos(next.pose.yaw) * dt;
  next.pose.y = state.pose.y + next.surge * std::sin(next.pose.yaw) * dt;
  return next;
}

}  // namespace usv::sim
