#include "usv/sim/sensors.hpp"

#include <algorithm>
#include <limits>

namespace usv::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest positive t with |o + t*d - c| == r (2-D), or +inf.
double ray_circle(const Vec2& o, const Vec2& d, const Vec2& c, double r) {
  Vec2 oc = o - c;
  double a = d.dot(d);
  double b = 2.0 * oc.dot(d);
  double c0 = oc.dot(oc) - r * r;
  double disc = b * b - 4.0 * a * c0;
  if (disc < 0.0 || a <= 0.0) return kInf;
  double sq = std::sqrt(disc);
  double t1 = (-b - sq) / (2.0 * a);
  double t2 = (-b + sq) / (2.0 * a);
  if (t1 > 0.0) return t1;
  if (t2 > 0.0) return t2;
  return kInf;
}

// Slab test of a 2-D ray against a rotated rectangle footprint.
double ray_box_2d(const Vec2& o, const Vec2& d, const WorldObject& obj) {
  Vec2 lo = (o - obj.center).rotated(-obj.yaw);
  Vec2 ld = d.rotated(-obj.yaw);
  double tmin = 0.0, tmax = kInf;
  const double mins[2] = {-obj.extents.x, -obj.extents.y};
  const double maxs[2] = {obj.extents.x, obj.extents.y};
  const double ov[2] = {lo.x, lo.y};
  const double dv[2] = {ld.x, ld.y};
  for (int i = 0; i < 2; ++i) {
    if (std::abs(dv[i]) < 1e-12) {
      if (ov[i] < mins[i] || ov[i] > maxs[i]) return kInf;
      continue;
    }
    double t1 = (mins[i] - ov[i]) / dv[i];
    double t2 = (maxs[i] - ov[i]) / dv[i];
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
    if (tmin > tmax) return kInf;
  }
  return tmin > 0.0 ? tmin : (tmax > 0.0 ? tmax : kInf);
}

// 3-D ray against the extruded object volume (z in [0, height]).
double ray_object_3d(const Vec3& o, const Vec3& d, const WorldObject& obj) {
  if (obj.shape == ShapeKind::circle) {
    double t = ray_circle({o.x, o.y}, {d.x, d.y}, obj.center, obj.radius);
    if (t == kInf) return kInf;
    double z = o.z + t * d.z;
    return (z >= 0.0 && z <= obj.height) ? t : kInf;
  }
  // Box: full slab test including the z extent, so top hits count too.
  Vec2 lo = (Vec2{o.x, o.y} - obj.center).rotated(-obj.yaw);
  Vec2 ld = Vec2{d.x, d.y}.rotated(-obj.yaw);
  double tmin = 0.0, tmax = kInf;
  const double mins[3] = {-obj.extents.x, -obj.extents.y, 0.0};
  const double maxs[3] = {obj.extents.x, obj.extents.y, obj.height};
  const double ov[3] = {lo.x, lo.y, o.z};
  const double dv[3] = {ld.x, ld.y, d.z};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(dv[i]) < 1e-12) {
      if (ov[i] < mins[i] || ov[i] > maxs[i]) return kInf;
      continue;
    }
    double t1 = (mins[i] - ov[i]) / dv[i];
    double t2 = (maxs[i] - ov[i]) / dv[i];
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
    if (tmin > tmax) return kInf;
  }
  return tmin > 0.0 ? tmin : kInf;
}

}  // namespace

PointCloud sample_lidar_cloud(const World& world, const VesselState& vessel,
                              const LidarParams& params, RngStream& rng) {
  PointCloud cloud;
  cloud.frame = CloudFrame::sensor;

  Vec3 origin{vessel.pose.x, vessel.pose.y, params.sensor_height};
  double yaw = vessel.pose.yaw;

  for (int iv = 0; iv < params.rays_v; ++iv) {
    double elev = params.rays_v > 1
                      ? params.elev_min + (params.elev_max - params.elev_min) * iv /
                            (params.rays_v - 1)
                      : params.elev_min;
    double ce = std::cos(elev), se = std::sin(elev);
    for (int ih = 0; ih < params.rays_h; ++ih) {
      double az_body = -kPi + 2.0 * kPi * ih / params.rays_h;
      Vec3 dir_body{ce * std::cos(az_body), ce * std::sin(az_body), se};
      Vec3 dir_world{ce * std::cos(az_body + yaw), ce * std::sin(az_body + yaw), se};

      double t_hit = kInf;
      for (const auto& obj : world.objects) {
        t_hit = std::min(t_hit, ray_object_3d(origin, dir_world, obj));
      }
      // Sea plane z = 0.
      if (dir_world.z < 0.0) {
        t_hit = std::min(t_hit, -origin.z / dir_world.z);
      }
      if (t_hit == kInf || t_hit > params.max_range) continue;

      if (params.range_sigma > 0.0) {
        t_hit = std::max(0.05, rng.gaussian(t_hit, params.range_sigma));
        if (t_hit > params.max_range) t_hit = params.max_range;
      }
      cloud.points.push_back(dir_body * t_hit);
    }
  }
  return cloud;
}

RangeScan sample_range_scan(const World& world, const VesselState& vessel,
                            int n_beams, double fov, double max_range) {
  RangeScan scan;
  scan.max_range = max_range;
  if (n_beams < 3) n_beams = 3;
  scan.angles.reserve(n_beams);
  scan.ranges.reserve(n_beams);

  Vec2 origin = vessel.pose.position();
  for (int i = 0; i < n_beams; ++i) {
    double bearing = -0.5 * fov + fov * i / (n_beams - 1);
    double world_ang = vessel.pose.yaw + bearing;
    Vec2 dir{std::cos(world_ang), std::sin(world_ang)};

    double t_hit = kInf;
    for (const auto& obj : world.objects) {
      double t = obj.shape == ShapeKind::circle
                     ? ray_circle(origin, dir, obj.center, obj.radius)
                     : ray_box_2d(origin, dir, obj);
      t_hit = std::min(t_hit, t);
    }
    scan.angles.push_back(bearing);
    scan.ranges.push_back(t_hit > max_range ? max_range : t_hit);
  }
  return scan;
}

Vec2 read_gps(const VesselState& vessel, const SensorNoise& noise, RngStream& rng) {
  return {rng.gaussian(vessel.pose.x, noise.gps_sigma),
          rng.gaussian(vessel.pose.y, noise.gps_sigma)};
}

double read_compass(const VesselState& vessel, const SensorNoise& noise, RngStream& rng) {
  return wrap_angle(rng.gaussian(vessel.pose.yaw, noise.compass_sigma));
}

}  // namespace usv::sim
