// Simulated sensors: 3-D LiDAR point sampling, planar range scan, noisy
// GPS and compass. All randomness comes from streams derived from the
// world noise seed, so identical inputs give identical readings.
#pragma once

#include "usv/common/rng.hpp"
#include "usv/sim/types.hpp"
#include "usv/sim/world.hpp"

namespace usv::sim {

struct LidarParams {
  int rays_h = 180;             // horizontal rays over 360 degrees
  int rays_v = 16;              // vertical rays over the elevation fan
  double elev_min = -0.50;      // rad, lowest elevation
  double elev_max = 0.15;       // rad, highest elevation
  double max_range = 30.0;      // m
  double sensor_height = 2.0;   // m above the sea plane
  double range_sigma = 0.0;     // per-return range noise
};

// First-hit point sampling against object surfaces and the sea plane.
// Points are in the sensor frame (origin at the LiDAR, x forward, z up);
// sea returns land at z = -sensor_height.
PointCloud sample_lidar_cloud(const World& world, const VesselState& vessel,
                              const LidarParams& params, RngStream& rng);

// Planar scan over `fov` radians centered on the heading; per-beam nearest
// intersection with object footprints, max_range where none.
RangeScan sample_range_scan(const World& world, const VesselState& vessel,
                            int n_beams, double fov, double max_range);

// Truth position plus zero-mean Gaussian noise from `rng`.
Vec2 read_gps(const VesselState& vessel, const SensorNoise& noise, RngStream& rng);

// Truth yaw plus Gaussian noise, wrapped to (-pi, pi].
double read_compass(const VesselState& vessel, const SensorNoise& noise, RngStream& rng);

}  // namespace usv::sim
