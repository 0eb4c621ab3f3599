// Obstacle manager (tracked convex footprints + alerts) and the
// minimum-angle real-time path planner.
#pragma once

#include <optional>
#include <vector>

#include "usv/planning/geometry2d.hpp"
#include "usv/sim/world.hpp"

namespace usv::planning {

struct ObstacleTrack {
  int id = 0;
  ConvexPolygon footprint;  // already inflated by the safety margin
  long last_seen_tick = 0;
  bool alert_active = false;
};

struct TrackerParams {
  double gate_distance = 3.0;   // m, cluster-to-track association gate
  double safety_margin = 0.5;   // m, hull inflation
  long ttl_ticks = 20;          // drop tracks unseen this long
};

// Match world-frame clusters to existing tracks (nearest centroid inside
// the gate), replace matched footprints, spawn tracks for the rest and
// drop stale ones.
std::vector<ObstacleTrack> update_obstacle_tracks(std::vector<ObstacleTrack> tracks,
                                                  const std::vector<std::vector<Vec2>>& clusters,
                                                  long tick, const TrackerParams& params);

struct ObstacleAlert {
  int track_id = 0;
  double distance = 0.0;  // closest-point distance to the vessel
};

// One alert per track whose footprint lies within alert_range of the
// vessel; also refreshes each track's alert_active flag.
std::vector<ObstacleAlert> raise_alerts(std::vector<ObstacleTrack>& tracks,
                                        const sim::Pose2D& vessel_pose, double alert_range);

struct PlannedPath {
  std::vector<Vec2> vertices;  // start first, goal last

  double length() const;
};

struct PlannerParams {
  double clearance = 1.5;    // m, detour offset beyond the blocking hull
  int max_iterations = 64;
};

// Minimum-angle planner: while the segment to the goal is blocked, detour
// around the first blocking obstacle via the left/right extreme-vertex
// candidate with the smaller turn angle (ties go left), then continue from
// there. Returns nullopt when no collision-free candidate exists or the
// iteration cap is reached.
std::optional<PlannedPath> plan_min_angle(const Vec2& start, const Vec2& goal,
                                          const std::vector<ObstacleTrack>& tracks,
                                          const PlannerParams& params = {});

// World objects as planner footprints, inflated by `clearance`. Circles
// become circumscribed 16-gons; boxes keep their corners (extents grown).
std::vector<ObstacleTrack> tracks_from_world(const sim::World& world, double clearance);

}  // namespace usv::planning
