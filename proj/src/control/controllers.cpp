#include "usv/control/controllers.hpp"

namespace usv::control {

std::pair<double, PIDState> heading_control(double yaw_est, double yaw_ref,
                                            const HeadingController& ctl, double dt) {
  double err = angle_diff(yaw_ref, yaw_est);
  auto [out, next] = pid_step(ctl.gains, ctl.state, err, dt);
  return {clamp(out, -1.0, 1.0), next};
}

std::pair<double, CascadeState> speed_control(double speed_setpoint, double measured_speed,
                                              const CascadeGains& gains,
                                              const CascadeState& state, double dt) {
  auto [effort, inner_next] = pid_step(gains.inner, state.inner,
                                       speed_setpoint - measured_speed, dt);
  CascadeState next;
  next.inner = inner_next;
  return {clamp(effort, -1.0, 1.0), next};
}

CascadeOutput cascade_position_control(const sim::Pose2D& pose_est, const Vec2& target,
                                       double measured_speed, const CascadeGains& gains,
                                       const CascadeState& state, double dt) {
  // Signed along-track error: positive when the target is ahead.
  Vec2 to_target = target - pose_est.position();
  double along = to_target.dot(pose_est.heading_vec());

  CascadeOutput out;
  out.speed_setpoint = clamp(gains.outer_kp * along, -gains.v_max, gains.v_max);
  auto [effort, next] = speed_control(out.speed_setpoint, measured_speed, gains, state, dt);
  out.surge_effort = effort;
  out.state = next;
  return out;
}

sim::ThrustCommand mix_thrust(double surge_effort, double turn_effort) {
  return sim::ThrustCommand{surge_effort - turn_effort, surge_effort + turn_effort}
      .clamped();
}

}  // namespace usv::control
