#include "usv/behaviors/circling.hpp"

#include <stdexcept>

namespace usv::behaviors {

CirclingState circling_state(const sim::Pose2D& vessel_pose, const Vec2& totem_center,
                             double R, RotationDirection direction) {
  Vec2 radial = vessel_pose.position() - totem_center;
  double d = radial.norm();
  if (d < 1e-9) throw std::domain_error("circling_state: vessel at totem center");

  Vec2 u_r = radial / d;
  Vec2 tangent = direction == RotationDirection::counterclockwise
                     ? u_r.perp_left()             // (-y, x)
                     : Vec2{u_r.y, -u_r.x};

  CirclingState s;
  s.d = d;
  s.phi = angle_diff(vessel_pose.yaw, std::atan2(tangent.y, tangent.x));
  s.R = R;
  s.direction = direction;
  return s;
}

std::pair<sim::ThrustCommand, CirclingController> circling_command(
    const CirclingState& cstate, const CirclingController& ctl, double dt) {
  CirclingController next = ctl;

  auto [phi_out, phi_state] = control::pid_step(ctl.phi_gains, ctl.phi_state, -cstate.phi, dt);
  next.phi_state = phi_state;

  auto [d_out, d_state] = control::pid_step(ctl.d_gains, ctl.d_state, cstate.d - cstate.R, dt);
  next.d_state = d_state;

  // d > R must steer toward the totem: left (positive) when circling
  // counterclockwise, right when clockwise.
  double sign = cstate.direction == RotationDirection::counterclockwise ? 1.0 : -1.0;
  double turn = clamp(phi_out + sign * d_out, -1.0, 1.0);

  return {control::mix_thrust(ctl.cruise_effort, turn), next};
}

}  // namespace usv::behaviors
