// Randomized planner scenarios shared by the planning tests and the
// acceptance suite: solvable by construction (obstacles pairwise clear of
// each other and of the start/goal, so a detour always exists).
#pragma once

#include "usv/common/rng.hpp"
#include "usv/planning/planner.hpp"

namespace usv::test {

struct PlannerScenario {
  Vec2 start;
  Vec2 goal;
  std::vector<planning::ObstacleTrack> tracks;
};

inline PlannerScenario random_planner_scenario(uint64_t seed, int max_obstacles = 10,
                                               double clearance = 1.5) {
  RngStream rng(seed);
  PlannerScenario sc;
  sc.start = {-25.0, rng.uniform(-5.0, 5.0)};
  sc.goal = {25.0, rng.uniform(-5.0, 5.0)};

  int want = rng.uniform_int(0, max_obstacles);
  struct Disc {
    Vec2 c;
    double r;
  };
  std::vector<Disc> discs;
  int attempts = 0;
  while (static_cast<int>(discs.size()) < want && attempts < 400) {
    ++attempts;
    Disc d{{rng.uniform(-18.0, 18.0), rng.uniform(-12.0, 12.0)},
           rng.uniform(0.5, 2.0)};
    double inflated = d.r + clearance;
    if ((d.c - sc.start).norm() < inflated + 3.0) continue;
    if ((d.c - sc.goal).norm() < inflated + 3.0) continue;
    bool clash = false;
    for (const auto& o : discs) {
      // Keep a full vessel passage open between any two inflated hulls.
      if ((d.c - o.c).norm() < d.r + o.r + 2.0 * clearance + 2.5) clash = true;
    }
    if (clash) continue;
    discs.push_back(d);
  }

  int id = 1;
  for (const auto& d : discs) {
    planning::ObstacleTrack t;
    t.id = id++;
    t.footprint = planning::circumscribed_polygon(d.c, d.r + clearance, 16);
    sc.tracks.push_back(std::move(t));
  }
  return sc;
}

}  // namespace usv::test
