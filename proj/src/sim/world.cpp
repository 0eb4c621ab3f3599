#include "usv/sim/world.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace usv::sim {

using nlohmann::json;

const char* to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::obstacle_buoy: return "obstacle_buoy";
    case ObjectKind::totem_buoy: return "totem_buoy";
    case ObjectKind::dock: return "dock";
    case ObjectKind::deliver_box: return "deliver_box";
  }
  return "unknown";
}

bool object_kind_from_string(const std::string& s, ObjectKind& out) {
  if (s == "obstacle_buoy") out = ObjectKind::obstacle_buoy;
  else if (s == "totem_buoy") out = ObjectKind::totem_buoy;
  else if (s == "dock") out = ObjectKind::dock;
  else if (s == "deliver_box") out = ObjectKind::deliver_box;
  else return false;
  return true;
}

double distance_to_object(const Vec2& p, const WorldObject& obj) {
  if (obj.shape == ShapeKind::circle) {
    double d = (p - obj.center).norm() - obj.radius;
    return d > 0.0 ? d : 0.0;
  }
  // Box: transform into the box frame, clamp, measure.
  Vec2 local = (p - obj.center).rotated(-obj.yaw);
  double dx = std::abs(local.x) - obj.extents.x;
  double dy = std::abs(local.y) - obj.extents.y;
  if (dx <= 0.0 && dy <= 0.0) return 0.0;
  dx = dx > 0.0 ? dx : 0.0;
  dy = dy > 0.0 ? dy : 0.0;
  return std::hypot(dx, dy);
}

bool check_collision(const World& world, const VesselState& vessel) {
  Vec2 p = vessel.pose.position();
  for (const auto& obj : world.objects) {
    if (distance_to_object(p, obj) <= world.vessel_radius) return true;
  }
  return false;
}

namespace {

Vec2 parse_vec2(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error(std::string("world: ") + what + " must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

WorldObject parse_object(const json& j, int fallback_id) {
  WorldObject obj;
  obj.id = j.value("id", fallback_id);

  std::string kind = j.value("kind", "obstacle_buoy");
  if (!object_kind_from_string(kind, obj.kind)) {
    throw std::runtime_error("world: unknown object kind '" + kind + "'");
  }

  std::string shape = j.value("shape", "circle");
  if (shape == "circle") {
    obj.shape = ShapeKind::circle;
    obj.center = parse_vec2(j.at("center"), "center");
    obj.radius = j.at("radius").get<double>();
    if (!(obj.radius > 0.0)) throw std::runtime_error("world: circle radius must be > 0");
  } else if (shape == "box") {
    obj.shape = ShapeKind::box;
    obj.center = parse_vec2(j.at("center"), "center");
    obj.extents = parse_vec2(j.at("extents"), "extents");
    obj.yaw = j.value("yaw", 0.0);
    if (!(obj.extents.x > 0.0 && obj.extents.y > 0.0)) {
      throw std::runtime_error("world: box extents must be > 0");
    }
  } else {
    throw std::runtime_error("world: unknown shape '" + shape + "'");
  }

  obj.height = j.value("height", 1.0);
  if (!(obj.height > 0.0)) throw std::runtime_error("world: height must be > 0");
  return obj;
}

}  // namespace

World parse_world(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("world: invalid JSON: ") + e.what());
  }

  World world;
  if (j.contains("vessel_start")) {
    const auto& v = j["vessel_start"];
    world.vessel_start.x = v.value("x", 0.0);
    world.vessel_start.y = v.value("y", 0.0);
    world.vessel_start.yaw = wrap_angle(v.value("yaw", 0.0));
  }
  if (j.contains("noise")) {
    const auto& n = j["noise"];
    world.noise.gps_sigma = n.value("gps_sigma", 0.0);
    world.noise.compass_sigma = n.value("compass_sigma", 0.0);
    world.noise.seed = n.value("seed", uint64_t{0});
    if (world.noise.gps_sigma < 0.0 || world.noise.compass_sigma < 0.0) {
      throw std::runtime_error("world: noise sigmas must be >= 0");
    }
  }
  if (j.contains("dynamics")) {
    const auto& d = j["dynamics"];
    auto& p = world.dynamics;
    p.dt = d.value("dt", p.dt);
    p.thrust_gain = d.value("thrust_gain", p.thrust_gain);
    p.drag_surge = d.value("drag_surge", p.drag_surge);
    p.mass_eff = d.value("mass_eff", p.mass_eff);
    p.turn_gain = d.value("turn_gain", p.turn_gain);
    p.drag_yaw = d.value("drag_yaw", p.drag_yaw);
    p.inertia_eff = d.value("inertia_eff", p.inertia_eff);
    p.surge_max = d.value("surge_max", p.surge_max);
    p.yaw_rate_max = d.value("yaw_rate_max", p.yaw_rate_max);
    if (!(p.dt > 0.0)) throw std::runtime_error("world: dynamics.dt must be > 0");
  }
  world.vessel_radius = j.value("vessel_radius", 1.0);

  if (j.contains("objects")) {
    int next_id = 1;
    for (const auto& jo : j["objects"]) {
      world.objects.push_back(parse_object(jo, next_id));
      next_id = world.objects.back().id + 1;
    }
  }
  return world;
}

World load_world(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("world: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_world(buf.str());
}

}  // namespace usv::sim
