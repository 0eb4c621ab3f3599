// Synthetic LiDAR-like clouds for dataset generation and perception
// tests: uniform sampling of the object surfaces visible from a given
// sensor position, with optional sea-plane patch and stray outliers.
#pragma once

#include "usv/common/rng.hpp"
#include "usv/perception/classifier.hpp"
#include "usv/sim/types.hpp"

namespace usv::perception {

struct SurfaceSampleParams {
  int n_points = 2000;
  double noise_sigma = 0.02;  // m, per-coordinate Gaussian jitter
};

// Sample points on the faces of `obj` visible from `sensor_pos` (world
// frame, z up from the sea plane), returned in the sensor frame of a
// sensor with the given yaw. Face choice is proportional to visible area;
// cylinders expose the half shell facing the sensor plus the top disc
// when the sensor sits above it.
sim::PointCloud sample_object_surface(const sim::WorldObject& obj, const Vec3& sensor_pos,
                                      double sensor_yaw, const SurfaceSampleParams& params,
                                      RngStream& rng);

// Class-typical object dimensions, randomized within per-class ranges.
sim::WorldObject random_object_of_class(ClassLabel label, const Vec2& center, RngStream& rng);

struct SceneParams {
  double range_min = 6.0;
  double range_max = 14.0;
  double sensor_height = 2.0;
  int object_points_ref = 700;  // at 10 m; scaled by (10/range)^2
  int object_points_min = 150;
  int object_points_max = 900;
  int sea_points = 500;
  double sea_patch_radius = 6.0;
  int outlier_points = 6;
  double noise_sigma = 0.02;
};

struct LabeledCloud {
  ClassLabel label = ClassLabel::obstacle_buoy;
  sim::PointCloud cloud;  // sensor frame: object + sea patch + outliers
  sim::WorldObject object;
  double range = 0.0;
};

// One labeled scene: an object of the class at a random range/bearing with
// random vessel heading, a sea patch under it and a few stray points.
LabeledCloud synthesize_scene(ClassLabel label, RngStream& rng, const SceneParams& params);

}  // namespace usv::perception
