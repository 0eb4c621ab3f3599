// Totem circling formulated on the (d, phi) pair: d the distance from the
// vessel to the totem center, phi the heading deviation from the
// tangential direction of the commanded circulation. On a perfect circle
// of radius R both errors are zero.
#pragma once

#include <utility>

#include "usv/control/controllers.hpp"
#include "usv/sim/types.hpp"

namespace usv::behaviors {

enum class RotationDirection { clockwise, counterclockwise };

struct CirclingState {
  double d = 0.0;    // m, distance to totem center
  double phi = 0.0;  // rad, heading deviation from the tangent, in (-pi, pi]
  double R = 0.0;    // m, commanded radius
  RotationDirection direction = RotationDirection::counterclockwise;
};

// Throws std::domain_error when the vessel sits on the totem center
// (tangent undefined).
CirclingState circling_state(const sim::Pose2D& vessel_pose, const Vec2& totem_center,
                             double R, RotationDirection direction);

struct CirclingController {
  control::PIDGains phi_gains{1.2, 0.0, 0.3, 0.5, 1.0};
  control::PIDGains d_gains{0.30, 0.02, 0.15, 2.0, 0.6};
  control::PIDState phi_state;
  control::PIDState d_state;
  double cruise_effort = 0.5;  // constant surge effort while circling
};

// Two PID loops folded into the single turn channel: phi is regulated to
// zero and the radial error d - R biases the heading toward/away from the
// totem (sign set by the circulation direction). Surge effort is constant.
std::pair<sim::ThrustCommand, CirclingController> circling_command(
    const CirclingState& cstate, const CirclingController& ctl, double dt);

}  // namespace usv::behaviors
