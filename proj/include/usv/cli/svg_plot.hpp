// Minimal SVG trajectory plot: world objects, waypoints and the truth /
// estimate tracks. Output is deterministic (fixed precision, no
// timestamps).
#pragma once

#include <string>
#include <vector>

#include "usv/guidance/mission.hpp"
#include "usv/sim/world.hpp"

namespace usv::cli {

std::string trajectory_svg(const sim::World& world,
                           const std::vector<guidance::TrajectoryRow>& log,
                           const std::vector<Vec2>& waypoints);

void save_trajectory_svg(const sim::World& world,
                         const std::vector<guidance::TrajectoryRow>& log,
                         const std::vector<Vec2>& waypoints, const std::string& path);

}  // namespace usv::cli
