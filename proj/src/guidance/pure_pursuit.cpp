#include "usv/guidance/pure_pursuit.hpp"

#include <stdexcept>

namespace usv::guidance {

namespace {

// Non-degenerate segments of the polyline with cumulative arc offsets.
struct Segments {
  std::vector<Vec2> a, b;
  std::vector<double> cum;  // arc length at segment start
  double total = 0.0;
};

Segments build_segments(const std::vector<Vec2>& wps) {
  Segments s;
  for (size_t i = 0; i + 1 < wps.size(); ++i) {
    double len = (wps[i + 1] - wps[i]).norm();
    if (len <= 0.0) continue;
    s.a.push_back(wps[i]);
    s.b.push_back(wps[i + 1]);
    s.cum.push_back(s.total);
    s.total += len;
  }
  return s;
}

}  // namespace

double WaypointPath::total_length() const { return build_segments(waypoints).total; }

Vec2 WaypointPath::point_at_arc(double s) const {
  Segments segs = build_segments(waypoints);
  if (segs.a.empty()) return waypoints.front();
  if (s <= 0.0) return segs.a.front();
  if (s >= segs.total) return segs.b.back();
  for (size_t i = 0; i < segs.a.size(); ++i) {
    double len = (segs.b[i] - segs.a[i]).norm();
    if (s <= segs.cum[i] + len) {
      double t = (s - segs.cum[i]) / len;
      return segs.a[i] + (segs.b[i] - segs.a[i]) * t;
    }
  }
  return segs.b.back();
}

PursuitTarget pure_pursuit_target(const sim::Pose2D& pose, const WaypointPath& path,
                                  double progress) {
  if (!path.valid()) throw std::invalid_argument("pure_pursuit_target: invalid path");

  Segments segs = build_segments(path.waypoints);
  if (segs.a.empty()) {
    // Single (or fully duplicated) waypoint: it is always the target.
    return {path.waypoints.front(), 0.0};
  }

  // Closest point on the path, restricted to arcs >= progress (the
  // projection never slides backwards) and to a forward window past the
  // best match so far. The window keeps the projection from snapping to a
  // far-ahead segment on self-crossing or loop paths (square missions end
  // where they start); it still lets the target slip onto the next
  // segment near a corner.
  Vec2 p = pose.position();
  double window = 2.0 * path.lookahead;
  double best_arc = -1.0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < segs.a.size(); ++i) {
    Vec2 ab = segs.b[i] - segs.a[i];
    double len = ab.norm();
    if (segs.cum[i] + len < progress) continue;
    if (best_arc >= 0.0 && segs.cum[i] > best_arc + window) break;
    double t_lo = clamp((progress - segs.cum[i]) / len, 0.0, 1.0);
    double t = clamp((p - segs.a[i]).dot(ab) / (len * len), t_lo, 1.0);
    double arc = segs.cum[i] + t * len;
    double d = (p - (segs.a[i] + ab * t)).norm();
    if (d < best_dist && (best_arc < 0.0 || arc <= best_arc + window)) {
      best_dist = d;
      best_arc = arc;
    }
  }
  if (best_arc < 0.0) best_arc = segs.total;

  double new_progress = std::max(progress, best_arc);
  Vec2 target = path.point_at_arc(std::min(new_progress + path.lookahead, segs.total));
  return {target, new_progress};
}

sim::ThrustCommand pure_pursuit_command(const sim::Pose2D& pose_est, double speed_est,
                                        const Vec2& target, double dist_to_final,
                                        double arrival_radius, const PursuitParams& params,
                                        PursuitControllers& ctls, double dt) {
  if (!finite(target)) throw std::invalid_argument("pure_pursuit_command: non-finite target");

  Vec2 to_target = target - pose_est.position();
  double turn = 0.0;
  if (to_target.norm() > 1e-9) {
    double bearing = std::atan2(to_target.y, to_target.x);
    auto [t, hs] = control::heading_control(pose_est.yaw, bearing, ctls.heading, dt);
    turn = t;
    ctls.heading.state = hs;
  }

  double v_set = 0.0;
  if (dist_to_final > arrival_radius) {
    v_set = std::min(params.cruise_speed, params.slowdown_gain * dist_to_final);
  }
  auto [surge, cs] =
      control::speed_control(v_set, speed_est, ctls.cascade, ctls.cascade_state, dt);
  ctls.cascade_state = cs;

  return control::mix_thrust(surge, turn);
}

}  // namespace usv::guidance
