#include "usv/perception/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace usv::perception {

namespace {

// Uniform hash grid over 3-D points for fixed-radius neighbor queries.
class PointGrid {
 public:
  PointGrid(const std::vector<Vec3>& pts, double cell) : pts_(pts), cell_(cell) {
    for (size_t i = 0; i < pts.size(); ++i) cells_[key(pts[i])].push_back(i);
  }

  template <typename Fn>
  void for_neighbors(const Vec3& p, double radius, Fn&& fn) const {
    double r_sq = radius * radius;
    int64_t cx = coord(p.x), cy = coord(p.y), cz = coord(p.z);
    for (int64_t dx = -1; dx <= 1; ++dx) {
      for (int64_t dy = -1; dy <= 1; ++dy) {
        for (int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(pack(cx + dx, cy + dy, cz + dz));
          if (it == cells_.end()) continue;
          for (size_t j : it->second) {
            Vec3 d = pts_[j] - p;
            if (d.dot(d) <= r_sq) fn(j);
          }
        }
      }
    }
  }

 private:
  int64_t coord(double v) const { return static_cast<int64_t>(std::floor(v / cell_)); }
  static int64_t pack(int64_t x, int64_t y, int64_t z) {
    return (x * 73856093) ^ (y * 19349663) ^ (z * 83492791);
  }
  int64_t key(const Vec3& p) const { return pack(coord(p.x), coord(p.y), coord(p.z)); }

  const std::vector<Vec3>& pts_;
  double cell_;
  std::unordered_map<int64_t, std::vector<size_t>> cells_;
};

struct DisjointSet {
  std::vector<size_t> parent;
  explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PlaneRemoval remove_sea_plane(const sim::PointCloud& cloud, const RansacParams& params) {
  PlaneRemoval out;
  out.cloud = cloud;
  if (cloud.size() < params.min_points) return out;

  RngStream rng(params.seed);
  const auto& pts = cloud.points;
  size_t n = pts.size();

  std::array<double, 4> best_plane{0, 0, 0, 0};
  size_t best_inliers = 0;

  for (int it = 0; it < params.iterations; ++it) {
    size_t i0 = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    size_t i1 = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    size_t i2 = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    if (i0 == i1 || i0 == i2 || i1 == i2) continue;

    Vec3 u = pts[i1] - pts[i0];
    Vec3 v = pts[i2] - pts[i0];
    Vec3 normal{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    double len = normal.norm();
    if (len < 1e-12) continue;  // collinear sample
    normal = normal * (1.0 / len);
    double d = -normal.dot(pts[i0]);

    size_t inliers = 0;
    for (const auto& p : pts) {
      if (std::abs(normal.dot(p) + d) <= params.epsilon) ++inliers;
    }
    if (inliers > best_inliers) {
      best_inliers = inliers;
      best_plane = {normal.x, normal.y, normal.z, d};
    }
  }

  if (best_inliers < static_cast<size_t>(params.min_inlier_fraction * n)) {
    return out;  // no plane, cloud unchanged
  }

  // Canonical orientation: z component up; if horizontal, first non-zero
  // component positive.
  double flip = 1.0;
  if (best_plane[2] < 0.0) flip = -1.0;
  else if (best_plane[2] == 0.0) {
    if (best_plane[0] < 0.0 || (best_plane[0] == 0.0 && best_plane[1] < 0.0)) flip = -1.0;
  }
  for (auto& c : best_plane) c *= flip;

  out.plane = best_plane;
  out.plane_found = true;
  out.cloud.points.clear();
  for (const auto& p : pts) {
    double dist = std::abs(best_plane[0] * p.x + best_plane[1] * p.y + best_plane[2] * p.z +
                           best_plane[3]);
    if (dist > params.epsilon) out.cloud.points.push_back(p);
  }
  return out;
}

sim::PointCloud denoise(const sim::PointCloud& cloud, int k, double radius) {
  if (k < 1) throw std::invalid_argument("denoise: k must be >= 1");
  sim::PointCloud out;
  out.frame = cloud.frame;
  if (cloud.empty()) return out;

  PointGrid grid(cloud.points, radius);
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    int neighbors = 0;
    grid.for_neighbors(cloud.points[i], radius, [&](size_t j) {
      if (j != i) ++neighbors;
    });
    if (neighbors >= k) out.points.push_back(cloud.points[i]);
  }
  return out;
}

std::vector<sim::PointCloud> cluster(const sim::PointCloud& cloud, double link_distance,
                                     size_t min_cluster_size) {
  if (!(link_distance > 0.0)) throw std::invalid_argument("cluster: link_distance must be > 0");
  std::vector<sim::PointCloud> clusters;
  if (cloud.empty()) return clusters;

  size_t n = cloud.points.size();
  PointGrid grid(cloud.points, link_distance);
  DisjointSet ds(n);
  for (size_t i = 0; i < n; ++i) {
    grid.for_neighbors(cloud.points[i], link_distance, [&](size_t j) {
      if (j > i) ds.unite(i, j);
    });
  }

  std::unordered_map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < n; ++i) groups[ds.find(i)].push_back(i);

  struct Entry {
    sim::PointCloud cloud;
    Vec3 centroid;
  };
  std::vector<Entry> entries;
  for (auto& [root, idx] : groups) {
    if (idx.size() < min_cluster_size) continue;
    Entry e;
    e.cloud.frame = cloud.frame;
    for (size_t i : idx) {
      e.cloud.points.push_back(cloud.points[i]);
      e.centroid = e.centroid + cloud.points[i];
    }
    e.centroid = e.centroid * (1.0 / static_cast<double>(idx.size()));
    entries.push_back(std::move(e));
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.cloud.size() != b.cloud.size()) return a.cloud.size() > b.cloud.size();
    if (a.centroid.x != b.centroid.x) return a.centroid.x < b.centroid.x;
    if (a.centroid.y != b.centroid.y) return a.centroid.y < b.centroid.y;
    return a.centroid.z < b.centroid.z;
  });

  for (auto& e : entries) clusters.push_back(std::move(e.cloud));
  return clusters;
}

NormalizedCloud normalize_to_object_frame(const sim::PointCloud& cluster_sensor_frame) {
  if (cluster_sensor_frame.empty()) {
    throw std::invalid_argument("normalize_to_object_frame: empty cluster");
  }

  NormalizedCloud out;
  Vec3 c;
  for (const auto& p : cluster_sensor_frame.points) c = c + p;
  c = c * (1.0 / static_cast<double>(cluster_sensor_frame.size()));
  out.centroid = c;

  double horiz = std::hypot(c.x, c.y);
  if (horiz < 1e-6) {
    out.yaw = 0.0;  // directly above/below the sensor, bearing undefined
    out.yaw_normalized = false;
  } else {
    out.yaw = std::atan2(c.y, c.x);
  }

  double cs = std::cos(-out.yaw), sn = std::sin(-out.yaw);
  out.cloud.frame = sim::CloudFrame::object;
  out.cloud.points.reserve(cluster_sensor_frame.size());
  for (const auto& p : cluster_sensor_frame.points) {
    Vec3 q = p - c;
    out.cloud.points.push_back({cs * q.x - sn * q.y, sn * q.x + cs * q.y, q.z});
  }
  return out;
}

sim::PointCloud center_cloud(const sim::PointCloud& cloud) {
  sim::PointCloud out;
  out.frame = sim::CloudFrame::object;
  if (cloud.empty()) return out;
  Vec3 c;
  for (const auto& p : cloud.points) c = c + p;
  c = c * (1.0 / static_cast<double>(cloud.size()));
  for (const auto& p : cloud.points) out.points.push_back(p - c);
  return out;
}

PipelineResult run_pipeline(const sim::PointCloud& scene_sensor_frame,
                            const PipelineParams& params) {
  PipelineResult res;

  PlaneRemoval removal = remove_sea_plane(scene_sensor_frame, params.ransac);
  res.plane_found = removal.plane_found;

  sim::PointCloud filtered =
      denoise(removal.cloud, params.denoise_k, params.denoise_radius);
  auto clusters = cluster(filtered, params.link_distance, params.min_cluster_size);
  res.clusters_found = clusters.size();
  if (clusters.empty()) {
    res.error = "no cluster above the minimum size";
    return res;
  }

  res.object_cloud = normalize_to_object_frame(clusters.front()).cloud;
  res.ok = true;
  return res;
}

}  // namespace usv::perception
