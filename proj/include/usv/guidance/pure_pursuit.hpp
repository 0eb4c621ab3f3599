// Pure-pursuit waypoint following. The lookahead point is found by an
// arc-length walk on the polyline: project the vessel onto the path (never
// moving backwards), then advance `lookahead` meters along it. This
// behaves the same as the circle-intersection variant on-path and degrades
// gracefully when far off-path.
#pragma once

#include <utility>
#include <vector>

#include "usv/control/controllers.hpp"
#include "usv/sim/types.hpp"

namespace usv::guidance {

struct WaypointPath {
  std::vector<Vec2> waypoints;
  double arrival_radius = 1.5;  // m
  double lookahead = 5.0;       // m

  bool valid() const {
    return !waypoints.empty() && arrival_radius > 0.0 && lookahead > 0.0;
  }
  double total_length() const;
  Vec2 point_at_arc(double s) const;
};

// Progress along the path as arc length of the vessel's projection,
// monotonically non-decreasing across calls within a mission.
struct PursuitTarget {
  Vec2 point;
  double progress = 0.0;
};

PursuitTarget pure_pursuit_target(const sim::Pose2D& pose, const WaypointPath& path,
                                  double progress);

struct PursuitParams {
  double cruise_speed = 1.5;   // m/s
  double slowdown_gain = 0.5;  // speed setpoint per meter of remaining distance
};

struct PursuitControllers {
  control::HeadingController heading;
  control::CascadeGains cascade;
  control::CascadeState cascade_state;
};

// Steer toward the lookahead point, regulate speed toward cruise, scaled
// down near the final waypoint (zero inside the arrival radius).
sim::ThrustCommand pure_pursuit_command(const sim::Pose2D& pose_est, double speed_est,
                                        const Vec2& target, double dist_to_final,
                                        double arrival_radius, const PursuitParams& params,
                                        PursuitControllers& ctls, double dt);

}  // namespace usv::guidance
