#include "usv/behaviors/docking.hpp"

namespace usv::behaviors {

const char* to_string(DockAction a) {
  switch (a) {
    case DockAction::turn_left: return "turn_left";
    case DockAction::go_straight: return "go_straight";
    case DockAction::turn_right: return "turn_right";
  }
  return "unknown";
}

DockAction dock_policy(const sim::Pose2D& vessel_pose, const sim::Pose2D& dock_pose,
                       const DockParams& params) {
  Vec2 aim = dock_pose.position() + dock_pose.heading_vec() * params.aim_depth;
  Vec2 to_aim = aim - vessel_pose.position();
  double err = angle_diff(std::atan2(to_aim.y, to_aim.x), vessel_pose.yaw);
  if (std::abs(err) < params.dead_zone) return DockAction::go_straight;
  return err > 0.0 ? DockAction::turn_left : DockAction::turn_right;
}

}  // namespace usv::behaviors
