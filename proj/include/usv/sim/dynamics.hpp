// Differential-drive vessel dynamics: first-order lag on surge and yaw
// rate with linear drag, unicycle kinematics for the pose.
#pragma once

#include "usv/sim/types.hpp"

namespace usv::sim {

struct DynamicsParams {
  double dt = 0.1;            // s, integration step
  double thrust_gain = 2.0;   // k_t, surge force per unit mean thrust
  double drag_surge = 1.0;    // c_d
  double mass_eff = 1.0;      // m_eff
  double turn_gain = 0.25;    // k_r, moment per unit thrust difference
  double drag_yaw = 1.0;      // c_r
  double inertia_eff = 1.0;   // I_eff
  double surge_max = 2.0;     // m/s
  double yaw_rate_max = 1.0;  // rad/s

  // Steady-state surge for a constant symmetric command.
  double surge_fixed_point(double left, double right) const {
    return thrust_gain * 0.5 * (left + right) / drag_surge;
  }
  double yaw_rate_fixed_point(double left, double right) const {
    return turn_gain * (right - left) / drag_yaw;
  }
};

// Advance one tick. Semi-implicit Euler: velocities first, then the pose
// with the updated velocities. Throws std::invalid_argument on non-finite
// input or dt <= 0.
VesselState step_dynamics(const VesselState& state, const ThrustCommand& cmd,
                          double dt, const DynamicsParams& params);

}  // namespace usv::sim
