// Discrete 3-action docking approach. The same <turn_left, go_straight,
// turn_right> interface a learned policy would drive, served here by a
// geometric rule on the bearing error to the dock approach axis.
#pragma once

#include "usv/sim/types.hpp"

namespace usv::behaviors {

enum class DockAction { turn_left, go_straight, turn_right };

const char* to_string(DockAction a);

struct DockParams {
  double dead_zone = 10.0 * kPi / 180.0;  // rad, |error| below this goes straight
  double aim_depth = 2.0;                 // m, aim point inside the bay mouth
};

// dock_pose: bay-mouth center with yaw along the approach axis (pointing
// into the bay). Positive bearing error (aim point to port) turns left.
DockAction dock_policy(const sim::Pose2D& vessel_pose, const sim::Pose2D& dock_pose,
                       const DockParams& params);

}  // namespace usv::behaviors
