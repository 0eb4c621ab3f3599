#include "doctest.h"

#include "usv/common/rng.hpp"
#include "usv/common/xyz_io.hpp"
#include "usv/sim/dynamics.hpp"
#include "usv/sim/sensors.hpp"
#include "usv/sim/world.hpp"

#include <filesystem>

#include "support/oracles.hpp"

using namespace usv;
using namespace usv::sim;

namespace {

World single_cylinder_world(Vec2 center, double radius, double height = 2.0) {
  World w;
  WorldObject obj;
  obj.id = 1;
  obj.shape = ShapeKind::circle;
  obj.center = center;
  obj.radius = radius;
  obj.height = height;
  w.objects.push_back(obj);
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("sim");

TEST_CASE("equal thrust from rest: no turning moment") {
  DynamicsParams params;
  VesselState s;
  for (int i = 0; i < 50; ++i) s = step_dynamics(s, {1.0, 1.0}, 0.1, params);
  CHECK(s.yaw_rate == 0.0);
  CHECK(s.pose.yaw == 0.0);
  CHECK(s.surge > 0.0);
}

TEST_CASE("opposed thrust from rest: pure rotation") {
  DynamicsParams params;
  VesselState s;
  for (int i = 0; i < 50; ++i) s = step_dynamics(s, {-0.7, 0.7}, 0.1, params);
  CHECK(s.surge == 0.0);
  CHECK(s.yaw_rate > 0.0);
}

TEST_CASE("full thrust converges to the closed-form fixed point") {
  DynamicsParams params;
  // Fixed point of surge' = (k_t*(l+r)/2 - c_d*surge)/m_eff at l=r=1,
  // computed independently from the same constants.
  double expected = params.thrust_gain * 1.0 / params.drag_surge;
  CHECK(expected == doctest::Approx(params.surge_max));

  VesselState s;
  for (int i = 0; i < 2000; ++i) s = step_dynamics(s, {1.0, 1.0}, 0.1, params);
  CHECK(s.surge == doctest::Approx(expected).epsilon(1e-9));
  CHECK(s.surge <= params.surge_max);
}

TEST_CASE("non-finite input and bad dt are rejected") {
  DynamicsParams params;
  VesselState s;
  CHECK_THROWS_AS(step_dynamics(s, {std::nan(""), 0.0}, 0.1, params), std::invalid_argument);
  CHECK_THROWS_AS(step_dynamics(s, {0.0, 0.0}, 0.0, params), std::invalid_argument);
  s.surge = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(step_dynamics(s, {0.0, 0.0}, 0.1, params), std::invalid_argument);
}

TEST_CASE("yaw stays wrapped and zero thrust bleeds energy") {
  DynamicsParams params;
  RngStream rng(7);
  VesselState s;
  for (int i = 0; i < 600; ++i) {
    s = step_dynamics(s, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, 0.1, params);
    CHECK(s.pose.yaw > -kPi);
    CHECK(s.pose.yaw <= kPi);
  }
  // Coast-down: magnitudes never grow.
  for (int i = 0; i < 300; ++i) {
    VesselState next = step_dynamics(s, {0.0, 0.0}, 0.1, params);
    CHECK(std::abs(next.surge) <= std::abs(s.surge));
    CHECK(std::abs(next.yaw_rate) <= std::abs(s.yaw_rate));
    s = next;
  }
}

TEST_CASE("dynamics are deterministic") {
  DynamicsParams params;
  auto roll = [&] {
    RngStream rng(42);
    VesselState s;
    for (int i = 0; i < 500; ++i) {
      s = step_dynamics(s, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, 0.1, params);
    }
    return s;
  };
  VesselState a = roll(), b = roll();
  CHECK(a.pose.x == b.pose.x);
  CHECK(a.pose.y == b.pose.y);
  CHECK(a.pose.yaw == b.pose.yaw);
  CHECK(a.surge == b.surge);
  CHECK(a.yaw_rate == b.yaw_rate);
}

TEST_CASE("range scan: empty world returns max_range everywhere") {
  World w;
  VesselState v;
  RangeScan scan = sample_range_scan(w, v, 25, kPi, 20.0);
  REQUIRE(scan.angles.size() == scan.ranges.size());
  for (double r : scan.ranges) CHECK(r == 20.0);
}

TEST_CASE("range scan: boresight beam hits a circle at d - r") {
  double d = 12.0, r = 1.5;
  World w = single_cylinder_world({d, 0.0}, r);
  VesselState v;
  RangeScan scan = sample_range_scan(w, v, 25, kPi, 30.0);
  double boresight = scan.ranges[12];  // middle beam, bearing 0
  CHECK(boresight == doctest::Approx(d - r).epsilon(1e-12));

  // Brute-force march along the beam as an independent check.
  double t = 0.0;
  while (t < 30.0 && (Vec2{t, 0.0} - Vec2{d, 0.0}).norm() > r) t += 0.0005;
  CHECK(boresight == doctest::Approx(t).epsilon(1e-3));
}

TEST_CASE("range scan: object behind the fov is invisible") {
  World w = single_cylinder_world({-10.0, 0.0}, 2.0);
  VesselState v;  // forward-looking fov
  RangeScan scan = sample_range_scan(w, v, 25, 0.9 * kPi, 20.0);
  for (double r : scan.ranges) CHECK(r == 20.0);
}

TEST_CASE("lidar: empty world gives only sea-plane returns") {
  World w;
  VesselState v;
  LidarParams lp;
  RngStream rng(1);
  PointCloud cloud = sample_lidar_cloud(w, v, lp, rng);
  REQUIRE(!cloud.empty());
  for (const auto& p : cloud.points) {
    CHECK(p.z == doctest::Approx(-lp.sensor_height).epsilon(1e-9));
    CHECK(p.norm() <= lp.max_range + 1e-9);
  }
}

TEST_CASE("lidar: cylinder dead ahead lands points forward of the sensor") {
  World w = single_cylinder_world({8.0, 0.0}, 1.0, 3.0);
  VesselState v;
  LidarParams lp;
  RngStream rng(1);
  PointCloud cloud = sample_lidar_cloud(w, v, lp, rng);
  int object_points = 0;
  for (const auto& p : cloud.points) {
    if (p.z > -lp.sensor_height + 0.05) {  // above the sea plane
      ++object_points;
      CHECK(p.x > 0.0);
    }
  }
  CHECK(object_points > 10);
}

TEST_CASE("lidar: identical inputs give bit-identical clouds") {
  World w = single_cylinder_world({8.0, 0.0}, 1.0, 3.0);
  VesselState v;
  LidarParams lp;
  lp.range_sigma = 0.03;
  auto sample = [&] {
    RngStream rng(99);
    return sample_lidar_cloud(w, v, lp, rng);
  };
  PointCloud a = sample(), b = sample();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(a.points[i].z == b.points[i].z);
  }
}

TEST_CASE("gps: zero sigma is exact, unit sigma has unit spread") {
  VesselState v;
  v.pose = {3.0, -2.0, 0.5};
  SensorNoise noise;
  RngStream rng(5);
  Vec2 fix = read_gps(v, noise, rng);
  CHECK(fix.x == 3.0);
  CHECK(fix.y == -2.0);

  noise.gps_sigma = 1.0;
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(read_gps(v, noise, rng).x - 3.0);
  CHECK(test::stddev_of(xs) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(test::mean_of(xs)) < 0.05);
}

TEST_CASE("gps: fixed seed reproduces the sequence") {
  VesselState v;
  SensorNoise noise;
  noise.gps_sigma = 2.0;
  RngStream a(123), b(123);
  for (int i = 0; i < 50; ++i) {
    Vec2 fa = read_gps(v, noise, a);
    Vec2 fb = read_gps(v, noise, b);
    CHECK(fa.x == fb.x);
    CHECK(fa.y == fb.y);
  }
}

TEST_CASE("compass: exact at zero sigma, wrapped near pi") {
  VesselState v;
  v.pose.yaw = kPi;
  SensorNoise noise;
  RngStream rng(3);
  CHECK(read_compass(v, noise, rng) == kPi);

  noise.compass_sigma = 0.2;
  for (int i = 0; i < 200; ++i) {
    double yaw = read_compass(v, noise, rng);
    CHECK(yaw > -kPi);
    CHECK(yaw <= kPi);
  }
}

TEST_CASE("collision: center hit, clear miss, closed tangency") {
  World w = single_cylinder_world({3.0, 0.0}, 1.0);
  w.vessel_radius = 1.0;
  VesselState v;

  v.pose = {3.0, 0.0, 0.0};
  CHECK(check_collision(w, v));

  v.pose = {-3.0, 0.0, 0.0};
  CHECK(!check_collision(w, v));

  v.pose = {1.0, 0.0, 0.0};  // gap exactly vessel_radius
  CHECK(check_collision(w, v));
}

TEST_CASE("world json: parse, defaults and validation") {
  const char* text = R"({
    "vessel_start": {"x": 1, "y": 2, "yaw": 0.3},
    "noise": {"gps_sigma": 0.5, "compass_sigma": 0.01, "seed": 9},
    "dynamics": {"dt": 0.05, "surge_max": 3.0},
    "vessel_radius": 1.2,
    "objects": [
      {"id": 4, "kind": "totem_buoy", "shape": "circle", "center": [5, 6], "radius": 0.4, "height": 2.0},
      {"kind": "dock", "shape": "box", "center": [0, 10], "extents": [3, 1.5], "yaw": 0.7}
    ]
  })";
  World w = parse_world(text);
  CHECK(w.vessel_start.x == 1.0);
  CHECK(w.noise.seed == 9);
  CHECK(w.dynamics.dt == 0.05);
  CHECK(w.dynamics.surge_max == 3.0);
  REQUIRE(w.objects.size() == 2);
  CHECK(w.objects[0].kind == ObjectKind::totem_buoy);
  CHECK(w.objects[1].id == 5);  // follows the previous id
  CHECK(w.objects[1].shape == ShapeKind::box);

  CHECK_THROWS(parse_world("{ not json"));
  CHECK_THROWS(parse_world(R"({"objects": [{"kind": "kraken", "shape": "circle",
                               "center": [0,0], "radius": 1}]})"));
  CHECK_THROWS(parse_world(R"({"objects": [{"shape": "circle", "center": [0,0],
                               "radius": -1}]})"));
}

TEST_CASE("xyz roundtrip") {
  RngStream rng(11);
  PointCloud cloud;
  for (int i = 0; i < 200; ++i) {
    cloud.points.push_back(
        {rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-2, 3)});
  }
  auto path = std::filesystem::temp_directory_path() / "usv_test_cloud.xyz";
  save_xyz(cloud, path.string());
  PointCloud back = load_xyz(path.string());
  REQUIRE(back.size() == cloud.size());
  for (size_t i = 0; i < cloud.size(); ++i) {
    CHECK(back.points[i].x == doctest::Approx(cloud.points[i].x).epsilon(1e-6));
    CHECK(back.points[i].z == doctest::Approx(cloud.points[i].z).epsilon(1e-6));
  }
  std::filesystem::remove(path);
}

TEST_SUITE_END();
