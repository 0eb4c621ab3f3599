// Core simulator value types: vessel state, actuation, world objects and
// raw sensor products.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usv/common/geometry.hpp"

namespace usv::sim {

struct Pose2D {
  double x = 0.0;    // m
  double y = 0.0;    // m
  double yaw = 0.0;  // rad, kept in (-pi, pi]

  Vec2 position() const { return {x, y}; }
  Vec2 heading_vec() const { return {std::cos(yaw), std::sin(yaw)}; }
};

struct VesselState {
  Pose2D pose;
  double surge = 0.0;     // m/s, body-frame forward velocity
  double yaw_rate = 0.0;  // rad/s
};

// Normalized differential thrust, both components in [-1, 1].
struct ThrustCommand {
  double left = 0.0;
  double right = 0.0;

  ThrustCommand clamped() const {
    return {clamp(left, -1.0, 1.0), clamp(right, -1.0, 1.0)};
  }
};

enum class ObjectKind { obstacle_buoy, totem_buoy, dock, deliver_box };

const char* to_string(ObjectKind k);
bool object_kind_from_string(const std::string& s, ObjectKind& out);

enum class ShapeKind { circle, box };

// Static world object. Circles are vertical cylinders (buoys, totems),
// boxes are extruded rectangles (dock, deliver box). Everything sits on
// the sea plane z = 0 and extends up to `height`.
struct WorldObject {
  int id = 0;
  ObjectKind kind = ObjectKind::obstacle_buoy;
  ShapeKind shape = ShapeKind::circle;
  Vec2 center;
  double radius = 0.0;   // circle only
  Vec2 extents;          // box half-sizes, box only
  double yaw = 0.0;      // box orientation
  double height = 1.0;
};

enum class CloudFrame { sensor, object };

struct PointCloud {
  CloudFrame frame = CloudFrame::sensor;
  std::vector<Vec3> points;

  bool empty() const { return points.empty(); }
  size_t size() const { return points.size(); }
};

// Planar scan: `angles` are body-frame bearings, evenly spaced over the
// field of view; `ranges[i]` is the first-hit distance or max_range.
struct RangeScan {
  std::vector<double> angles;
  std::vector<double> ranges;
  double max_range = 0.0;
};

struct SensorNoise {
  double gps_sigma = 0.0;      // m
  double compass_sigma = 0.0;  // rad
  uint64_t seed = 0;
};

}  // namespace usv::sim
