#include "usv/estimation/fusion.hpp"

#include <stdexcept>

namespace usv::estimation {

namespace {
void check_gain(double g, const char* what) {
  if (!(g > 0.0) || g > 1.0) {
    throw std::invalid_argument(std::string("fusion: ") + what + " must be in (0, 1]");
  }
}
}  // namespace

PoseEstimate fuse_position(const PoseEstimate& prev, const Vec2& gps,
                           const Vec2& motion_delta, const FusionGains& gains) {
  check_gain(gains.position_gain, "position_gain");

  PoseEstimate out = prev;
  out.pose.x += motion_delta.x;
  out.pose.y += motion_delta.y;
  double var_pred = prev.position_var + gains.position_process_var;

  if (!finite(gps)) {
    out.position_var = var_pred;
    return out;
  }

  double g = gains.position_gain;
  out.pose.x += g * (gps.x - out.pose.x);
  out.pose.y += g * (gps.y - out.pose.y);
  out.position_var = (1.0 - g) * (1.0 - g) * var_pred + g * g * gains.gps_var;
  return out;
}

PoseEstimate fuse_heading(const PoseEstimate& prev, double compass_yaw,
                          double gyro_delta, const FusionGains& gains) {
  check_gain(gains.heading_gain, "heading_gain");

  PoseEstimate out = prev;
  double yaw_pred = wrap_angle(prev.pose.yaw + gyro_delta);
  double var_pred = prev.yaw_var + gains.heading_process_var;

  if (!finite(compass_yaw)) {
    out.pose.yaw = yaw_pred;
    out.yaw_var = var_pred;
    return out;
  }

  double g = gains.heading_gain;
  double err = angle_diff(compass_yaw, yaw_pred);  // minimal signed arc
  out.pose.yaw = wrap_angle(yaw_pred + g * err);
  out.yaw_var = (1.0 - g) * (1.0 - g) * var_pred + g * g * gains.compass_var;
  return out;
}

}  // namespace usv::estimation
