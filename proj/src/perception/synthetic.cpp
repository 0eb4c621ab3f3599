#include "usv/perception/synthetic.hpp"

#include <algorithm>
#include <cmath>

namespace usv::perception {

namespace {

Vec3 to_sensor_frame(const Vec3& world, const Vec3& sensor_pos, double sensor_yaw) {
  double cs = std::cos(-sensor_yaw), sn = std::sin(-sensor_yaw);
  Vec3 q = world - sensor_pos;
  return {cs * q.x - sn * q.y, sn * q.x + cs * q.y, q.z};
}

struct Face {
  double weight = 0.0;
  // Samples a world-frame point on the face.
  Vec3 (*sample)(const sim::WorldObject&, const Vec3&, RngStream&) = nullptr;
};

Vec3 sample_cyl_shell(const sim::WorldObject& obj, const Vec3& sensor, RngStream& rng) {
  double beta = std::atan2(sensor.y - obj.center.y, sensor.x - obj.center.x);
  double theta = beta + rng.uniform(-0.5 * kPi, 0.5 * kPi);  // half facing the sensor
  double z = rng.uniform(0.0, obj.height);
  return {obj.center.x + obj.radius * std::cos(theta),
          obj.center.y + obj.radius * std::sin(theta), z};
}

Vec3 sample_cyl_top(const sim::WorldObject& obj, const Vec3&, RngStream& rng) {
  double r = obj.radius * std::sqrt(rng.uniform());
  double theta = rng.uniform(0.0, 2.0 * kPi);
  return {obj.center.x + r * std::cos(theta), obj.center.y + r * std::sin(theta),
          obj.height};
}

}  // namespace

sim::PointCloud sample_object_surface(const sim::WorldObject& obj, const Vec3& sensor_pos,
                                      double sensor_yaw, const SurfaceSampleParams& params,
                                      RngStream& rng) {
  sim::PointCloud cloud;
  cloud.frame = sim::CloudFrame::sensor;
  if (params.n_points <= 0) return cloud;

  // Build the list of visible faces with their areas.
  struct Choice {
    double weight;
    int which;  // 0 shell/side0..3, 4 top
  };
  std::vector<Choice> faces;

  if (obj.shape == sim::ShapeKind::circle) {
    faces.push_back({kPi * obj.radius * obj.height, 0});  // visible half shell
    if (sensor_pos.z > obj.height) faces.push_back({kPi * obj.radius * obj.radius, 4});
  } else {
    // Box side faces: local +x, -x, +y, -y.
    const Vec2 normals_local[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const double half_len[4] = {obj.extents.y, obj.extents.y, obj.extents.x, obj.extents.x};
    for (int i = 0; i < 4; ++i) {
      Vec2 n = normals_local[i].rotated(obj.yaw);
      double offset = i < 2 ? obj.extents.x : obj.extents.y;
      Vec2 face_center = obj.center + n * offset;
      Vec2 to_sensor = Vec2{sensor_pos.x, sensor_pos.y} - face_center;
      if (n.dot(to_sensor) > 0.0) faces.push_back({2.0 * half_len[i] * obj.height, i});
    }
    if (sensor_pos.z > obj.height) {
      faces.push_back({4.0 * obj.extents.x * obj.extents.y, 4});
    }
  }
  if (faces.empty()) return cloud;

  double total = 0.0;
  for (const auto& f : faces) total += f.weight;

  cloud.points.reserve(params.n_points);
  for (int i = 0; i < params.n_points; ++i) {
    double pick = rng.uniform(0.0, total);
    int which = faces.back().which;
    for (const auto& f : faces) {
      if (pick < f.weight) {
        which = f.which;
        break;
      }
      pick -= f.weight;
    }

    Vec3 p;
    if (obj.shape == sim::ShapeKind::circle) {
      p = which == 4 ? sample_cyl_top(obj, sensor_pos, rng)
                     : sample_cyl_shell(obj, sensor_pos, rng);
    } else if (which == 4) {
      Vec2 local{rng.uniform(-obj.extents.x, obj.extents.x),
                 rng.uniform(-obj.extents.y, obj.extents.y)};
      Vec2 w = obj.center + local.rotated(obj.yaw);
      p = {w.x, w.y, obj.height};
    } else {
      const Vec2 normals_local[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      double offset = which < 2 ? obj.extents.x : obj.extents.y;
      double half = which < 2 ? obj.extents.y : obj.extents.x;
      double u = rng.uniform(-half, half);
      Vec2 local = normals_local[which] * offset +
                   (which < 2 ? Vec2{0.0, u} : Vec2{u, 0.0});
      Vec2 w = obj.center + local.rotated(obj.yaw);
      p = {w.x, w.y, rng.uniform(0.0, obj.height)};
    }

    Vec3 q = to_sensor_frame(p, sensor_pos, sensor_yaw);
    if (params.noise_sigma > 0.0) {
      q.x = rng.gaussian(q.x, params.noise_sigma);
      q.y = rng.gaussian(q.y, params.noise_sigma);
      q.z = rng.gaussian(q.z, params.noise_sigma);
    }
    cloud.points.push_back(q);
  }
  return cloud;
}

sim::WorldObject random_object_of_class(ClassLabel label, const Vec2& center, RngStream& rng) {
  sim::WorldObject obj;
  obj.kind = label;
  obj.center = center;
  switch (label) {
    case ClassLabel::obstacle_buoy:
      obj.shape = sim::ShapeKind::circle;
      obj.radius = rng.uniform(0.25, 0.45);
      obj.height = rng.uniform(0.5, 1.0);
      break;
    case ClassLabel::totem_buoy:
      obj.shape = sim::ShapeKind::circle;
      obj.radius = rng.uniform(0.3, 0.5);
      obj.height = rng.uniform(1.6, 2.4);
      break;
    case ClassLabel::dock:
      obj.shape = sim::ShapeKind::box;
      obj.extents = {rng.uniform(2.5, 3.5), rng.uniform(1.2, 1.8)};
      obj.yaw = rng.uniform(-kPi, kPi);
      obj.height = rng.uniform(0.8, 1.2);
      break;
    case ClassLabel::deliver_box:
      obj.shape = sim::ShapeKind::box;
      obj.extents = {rng.uniform(0.6, 1.0), rng.uniform(0.6, 1.0)};
      obj.yaw = rng.uniform(-kPi, kPi);
      obj.height = rng.uniform(1.0, 1.6);
      break;
  }
  return obj;
}

LabeledCloud synthesize_scene(ClassLabel label, RngStream& rng, const SceneParams& params) {
  LabeledCloud out;
  out.label = label;
  out.range = rng.uniform(params.range_min, params.range_max);
  double bearing = rng.uniform(-kPi, kPi);
  double sensor_yaw = rng.uniform(-kPi, kPi);

  Vec2 center{out.range * std::cos(bearing), out.range * std::sin(bearing)};
  out.object = random_object_of_class(label, center, rng);

  Vec3 sensor_pos{0.0, 0.0, params.sensor_height};

  double scale = 10.0 / out.range;
  SurfaceSampleParams sp;
  sp.n_points = std::clamp(static_cast<int>(params.object_points_ref * scale * scale),
                           params.object_points_min, params.object_points_max);
  sp.noise_sigma = params.noise_sigma;
  out.cloud = sample_object_surface(out.object, sensor_pos, sensor_yaw, sp, rng);

  // Sea patch around the object base.
  for (int i = 0; i < params.sea_points; ++i) {
    double r = params.sea_patch_radius * std::sqrt(rng.uniform());
    double a = rng.uniform(0.0, 2.0 * kPi);
    Vec3 w{center.x + r * std::cos(a), center.y + r * std::sin(a), 0.0};
    Vec3 q = to_sensor_frame(w, sensor_pos, sensor_yaw);
    q.z = rng.gaussian(q.z, params.noise_sigma);
    out.cloud.points.push_back(q);
  }

  // A few stray returns.
  for (int i = 0; i < params.outlier_points; ++i) {
    out.cloud.points.push_back({rng.uniform(-params.range_max, params.range_max),
                                rng.uniform(-params.range_max, params.range_max),
                                rng.uniform(-params.sensor_height, 3.0)});
  }
  return out;
}

}  // namespace usv::perception
