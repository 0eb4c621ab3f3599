// Static world description plus collision and footprint queries.
// Worlds load from a JSON document (see README for the schema).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usv/sim/dynamics.hpp"
#include "usv/sim/types.hpp"

namespace usv::sim {

struct World {
  std::vector<WorldObject> objects;
  Pose2D vessel_start;
  SensorNoise noise;
  DynamicsParams dynamics;
  double vessel_radius = 1.0;  // collision footprint of the vessel
};

// Horizontal distance from a point to an object footprint (0 if inside).
double distance_to_object(const Vec2& p, const WorldObject& obj);

// True iff the vessel footprint disc touches any object footprint.
// Tangency counts as contact (closed convention).
bool check_collision(const World& world, const VesselState& vessel);

// Parse a world from JSON text / load from a file.
// Throws std::runtime_error with a descriptive message on invalid input.
World parse_world(const std::string& json_text);
World load_world(const std::string& path);

}  // namespace usv::sim
