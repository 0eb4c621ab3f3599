// Pointcloud preprocessing: RANSAC sea-plane removal, neighborhood noise
// filtering, single-linkage clustering and object-frame normalization.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "usv/common/rng.hpp"
#include "usv/sim/types.hpp"

namespace usv::perception {

struct RansacParams {
  int iterations = 200;
  double epsilon = 0.15;             // m, inlier distance to the plane
  double min_inlier_fraction = 0.3;  // below this, report no plane
  size_t min_points = 20;            // don't attempt RANSAC on less
  uint64_t seed = 1;
};

struct PlaneRemoval {
  sim::PointCloud cloud;               // inliers removed (or input unchanged)
  std::array<double, 4> plane{0, 0, 0, 0};  // ax + by + cz + d = 0, unit normal
  bool plane_found = false;
};

// Best plane by inlier count over seeded trials; inliers within epsilon
// are removed. The normal is normalized with a non-negative z component
// (ties: first non-zero component positive).
PlaneRemoval remove_sea_plane(const sim::PointCloud& cloud, const RansacParams& params);

// Drop points with fewer than k neighbors within `radius`.
sim::PointCloud denoise(const sim::PointCloud& cloud, int k, double radius);

// Single-linkage Euclidean clustering. Clusters smaller than
// min_cluster_size are discarded; the rest are ordered by size descending,
// ties by centroid lexicographic order.
std::vector<sim::PointCloud> cluster(const sim::PointCloud& cloud, double link_distance,
                                     size_t min_cluster_size);

struct NormalizedCloud {
  sim::PointCloud cloud;      // object frame
  Vec3 centroid;              // original centroid (sensor frame)
  double yaw = 0.0;           // rotation removed
  bool yaw_normalized = true; // false when the centroid sits above the sensor
};

// Move the origin to the cluster centroid and yaw the frame so x points
// from the sensor toward the object (z stays vertical). This makes the
// planar projections insensitive to the viewing direction.
NormalizedCloud normalize_to_object_frame(const sim::PointCloud& cluster_sensor_frame);

// Translation-only variant (no yaw normalization), for comparison.
sim::PointCloud center_cloud(const sim::PointCloud& cloud);

// Full scene -> flattened image composition used by the dataset builder
// and the classify command.
struct PipelineParams {
  RansacParams ransac;
  int denoise_k = 3;
  double denoise_radius = 0.5;
  double link_distance = 0.8;
  size_t min_cluster_size = 8;
};

struct PipelineResult {
  bool ok = false;
  std::string error;
  bool plane_found = false;
  size_t clusters_found = 0;
  sim::PointCloud object_cloud;  // object frame, largest cluster
};

PipelineResult run_pipeline(const sim::PointCloud& scene_sensor_frame,
                            const PipelineParams& params);

}  // namespace usv::perception
