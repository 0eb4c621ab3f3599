// Constant-gain predict/correct fusion of GPS and compass. Position and
// orientation are handled separately; the heading correction blends along
// the minimal signed arc.
#pragma once

#include "usv/common/geometry.hpp"
#include "usv/sim/types.hpp"

namespace usv::estimation {

struct PoseEstimate {
  sim::Pose2D pose;
  double position_var = 1.0;  // m^2, per-axis
  double yaw_var = 0.1;       // rad^2
};

struct FusionGains {
  double position_gain = 0.3;   // blend toward GPS, (0, 1]
  double heading_gain = 0.5;    // blend toward compass, (0, 1]
  double position_process_var = 0.01;  // added by each motion prediction
  double heading_process_var = 0.001;
  double gps_var = 1.0;      // measurement variance used in the variance update
  double compass_var = 0.05;
};

// Predict with the odometry delta, then blend toward the GPS fix.
// A non-finite GPS reading skips the correction (prediction only).
PoseEstimate fuse_position(const PoseEstimate& prev, const Vec2& gps,
                           const Vec2& motion_delta, const FusionGains& gains);

// Same structure on the circle: predict with the gyro delta, correct along
// the wrapped angular error toward the compass yaw.
PoseEstimate fuse_heading(const PoseEstimate& prev, double compass_yaw,
                          double gyro_delta, const FusionGains& gains);

}  // namespace usv::estimation
