#include "usv/planning/planner.hpp"

#include <algorithm>
#include <limits>

namespace usv::planning {

namespace {

// Inflate a hull by pushing vertices out radially from the centroid.
// Degenerate clusters (< 3 hull vertices) become a hexagon around the
// centroid so every footprint is a usable polygon.
ConvexPolygon inflate_hull(const ConvexPolygon& hull, double margin) {
  if (!hull.valid()) {
    Vec2 c = hull.vertices.empty() ? Vec2{} : hull.centroid();
    double extent = margin;
    for (const auto& v : hull.vertices) {
      extent = std::max(extent, (v - c).norm() + margin);
    }
    return circumscribed_polygon(c, extent, 6);
  }
  Vec2 c = hull.centroid();
  ConvexPolygon out;
  out.vertices.reserve(hull.vertices.size());
  for (const auto& v : hull.vertices) {
    Vec2 dir = (v - c).normalized();
    if (dir.norm() == 0.0) dir = {1.0, 0.0};
    out.vertices.push_back(v + dir * margin);
  }
  return out;
}

}  // namespace

std::vector<ObstacleTrack> update_obstacle_tracks(std::vector<ObstacleTrack> tracks,
                                                  const std::vector<std::vector<Vec2>>& clusters,
                                                  long tick, const TrackerParams& params) {
  int next_id = 1;
  for (const auto& t : tracks) next_id = std::max(next_id, t.id + 1);

  std::vector<bool> matched(tracks.size(), false);
  for (const auto& cluster : clusters) {
    if (cluster.empty()) continue;
    Vec2 c;
    for (const auto& p : cluster) c = c + p;
    c = c / static_cast<double>(cluster.size());

    // Nearest unmatched track inside the gate.
    int best = -1;
    double best_d = params.gate_distance;
    for (size_t i = 0; i < tracks.size(); ++i) {
      if (matched[i]) continue;
      double d = (tracks[i].footprint.centroid() - c).norm();
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(i);
      }
    }

    ConvexPolygon footprint = inflate_hull(convex_hull(cluster), params.safety_margin);
    if (best >= 0) {
      tracks[best].footprint = footprint;
      tracks[best].last_seen_tick = tick;
      matched[best] = true;
    } else {
      tracks.push_back(ObstacleTrack{next_id++, footprint, tick, false});
    }
  }

  std::erase_if(tracks, [&](const ObstacleTrack& t) {
    return tick - t.last_seen_tick > params.ttl_ticks;
  });
  return tracks;
}

std::vector<ObstacleAlert> raise_alerts(std::vector<ObstacleTrack>& tracks,
                                        const sim::Pose2D& vessel_pose, double alert_range) {
  std::vector<ObstacleAlert> alerts;
  Vec2 p = vessel_pose.position();
  for (auto& t : tracks) {
    double d = distance_to_polygon(p, t.footprint);
    t.alert_active = d <= alert_range;
    if (t.alert_active) alerts.push_back({t.id, d});
  }
  return alerts;
}

double PlannedPath::length() const {
  double len = 0.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) len += (vertices[i + 1] - vertices[i]).norm();
  return len;
}

namespace {

bool segment_free(const Vec2& a, const Vec2& b, const std::vector<ObstacleTrack>& tracks) {
  for (const auto& t : tracks) {
    if (segment_collides(a, b, t.footprint)) return false;
  }
  return true;
}

bool point_free(const Vec2& p, const std::vector<ObstacleTrack>& tracks) {
  for (const auto& t : tracks) {
    if (point_in_polygon(p, t.footprint)) return false;
  }
  return true;
}

// First blocking track = minimum entry parameter along the segment.
const ObstacleTrack* first_blocker(const Vec2& a, const Vec2& b,
                                   const std::vector<ObstacleTrack>& tracks) {
  const ObstacleTrack* blocker = nullptr;
  double t_min = std::numeric_limits<double>::infinity();
  for (const auto& t : tracks) {
    if (!segment_collides(a, b, t.footprint)) continue;
    auto clip = clip_segment(a, b, t.footprint);
    double entry = clip ? clip->first : 0.0;
    if (entry < t_min) {
      t_min = entry;
      blocker = &t;
    }
  }
  return blocker;
}

}  // namespace

std::optional<PlannedPath> plan_min_angle(const Vec2& start, const Vec2& goal,
                                          const std::vector<ObstacleTrack>& tracks,
                                          const PlannerParams& params) {
  if (!point_free(start, tracks) || !point_free(goal, tracks)) return std::nullopt;

  PlannedPath path;
  path.vertices.push_back(start);
  Vec2 cur = start;

  for (int iter = 0; iter < params.max_iterations; ++iter) {
    if (segment_free(cur, goal, tracks)) {
      path.vertices.push_back(goal);
      return path;
    }

    const ObstacleTrack* blocker = first_blocker(cur, goal, tracks);
    if (!blocker) return std::nullopt;  // inconsistent state, give up

    Vec2 dir = (goal - cur).normalized();
    Vec2 left_n = dir.perp_left();

    // Extreme hull vertices on each side of the segment, offset outward
    // by the clearance.
    const auto& verts = blocker->footprint.vertices;
    const Vec2* v_left = &verts.front();
    const Vec2* v_right = &verts.front();
    for (const auto& v : verts) {
      if (left_n.dot(v - cur) > left_n.dot(*v_left - cur)) v_left = &v;
      if (left_n.dot(v - cur) < left_n.dot(*v_right - cur)) v_right = &v;
    }
    Vec2 cand_left = *v_left + left_n * params.clearance;
    Vec2 cand_right = *v_right - left_n * params.clearance;

    // Turn angle at the new vertex: heading change between the incoming
    // leg (cur -> candidate) and the continuation toward the goal.
    auto turn_angle = [&](const Vec2& cand) {
      double in = std::atan2(cand.y - cur.y, cand.x - cur.x);
      double out = std::atan2(goal.y - cand.y, goal.x - cand.x);
      return std::abs(angle_diff(out, in));
    };
    auto usable = [&](const Vec2& cand) {
      return finite(cand) && (cand - cur).norm() > 1e-9 && point_free(cand, tracks) &&
             segment_free(cur, cand, tracks);
    };

    bool left_ok = usable(cand_left);
    bool right_ok = usable(cand_right);
    if (!left_ok && !right_ok) return std::nullopt;

    Vec2 next;
    if (left_ok && right_ok) {
      // Ties break left (the positive-normal side).
      next = turn_angle(cand_right) < turn_angle(cand_left) ? cand_right : cand_left;
    } else {
      next = left_ok ? cand_left : cand_right;
    }

    path.vertices.push_back(next);
    cur = next;
  }
  return std::nullopt;  // iteration cap reached
}

std::vector<ObstacleTrack> tracks_from_world(const sim::World& world, double clearance) {
  std::vector<ObstacleTrack> tracks;
  for (const auto& obj : world.objects) {
    ObstacleTrack t;
    t.id = obj.id;
    if (obj.shape == sim::ShapeKind::circle) {
      t.footprint = circumscribed_polygon(obj.center, obj.radius + clearance, 16);
    } else {
      Vec2 e = obj.extents + Vec2{clearance, clearance};
      for (const Vec2& corner :
           {Vec2{e.x, e.y}, Vec2{-e.x, e.y}, Vec2{-e.x, -e.y}, Vec2{e.x, -e.y}}) {
        t.footprint.vertices.push_back(obj.center + corner.rotated(obj.yaw));
      }
    }
    tracks.push_back(std::move(t));
  }
  return tracks;
}

}  // namespace usv::planning
