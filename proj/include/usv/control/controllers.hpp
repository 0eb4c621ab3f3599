// Heading controller, cascade position controller and differential
// thrust mixing.
#pragma once

#include <utility>

#include "usv/control/pid.hpp"
#include "usv/sim/types.hpp"

namespace usv::control {

struct HeadingController {
  PIDGains gains{1.2, 0.0, 0.3, 1.0, 1.0};
  PIDState state;
};

// Turn effort in [-1, 1] toward yaw_ref. The error fed to the PID is the
// wrapped minimal signed difference, never the long way around.
std::pair<double, PIDState> heading_control(double yaw_est, double yaw_ref,
                                            const HeadingController& ctl, double dt);

// Outer loop: signed along-track distance -> speed setpoint (clamped to
// v_max). Inner loop: speed error -> surge effort.
struct CascadeGains {
  double outer_kp = 0.5;
  double v_max = 2.0;
  // Integrator sized so the inner loop can hold cruise speed against the
  // hull drag without a steady-state error.
  PIDGains inner{1.5, 0.4, 0.0, 2.0, 1.0};
};

struct CascadeState {
  PIDState inner;

  void reset() { inner.reset(); }
};

struct CascadeOutput {
  double surge_effort = 0.0;
  double speed_setpoint = 0.0;
  CascadeState state;
};

CascadeOutput cascade_position_control(const sim::Pose2D& pose_est, const Vec2& target,
                                       double measured_speed, const CascadeGains& gains,
                                       const CascadeState& state, double dt);

// Inner loop alone, for callers that already have a speed setpoint.
std::pair<double, CascadeState> speed_control(double speed_setpoint, double measured_speed,
                                              const CascadeGains& gains,
                                              const CascadeState& state, double dt);

// left = surge - turn, right = surge + turn, both clamped to [-1, 1].
// Positive turn effort yields a positive (counterclockwise) yaw moment.
sim::ThrustCommand mix_thrust(double surge_effort, double turn_effort);

}  // namespace usv::control
