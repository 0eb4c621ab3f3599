#include "usv/guidance/mission.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "usv/planning/planner.hpp"

namespace usv::guidance {

VesselSim::VesselSim(const sim::World& world, const estimation::FusionGains& fusion)
    : world_(world),
      fusion_(fusion),
      gps_rng_(derive_seed(world.noise.seed, "gps")),
      compass_rng_(derive_seed(world.noise.seed, "compass")) {
  truth_.pose = world.vessel_start;
  est_.pose = world.vessel_start;  // start pose is given, not estimated
  est_.position_var = 0.0;
  est_.yaw_var = 0.0;
}

void VesselSim::apply(const sim::ThrustCommand& cmd) {
  truth_ = sim::step_dynamics(truth_, cmd, world_.dynamics.dt, world_.dynamics);

  double gyro_delta = truth_.yaw_rate * world_.dynamics.dt;
  double compass = sim::read_compass(truth_, world_.noise, compass_rng_);
  est_ = estimation::fuse_heading(est_, compass, gyro_delta, fusion_);

  // Dead-reckoning delta from the speed sensor along the fused heading.
  Vec2 delta = est_.pose.heading_vec() * (truth_.surge * world_.dynamics.dt);
  Vec2 gps = sim::read_gps(truth_, world_.noise, gps_rng_);
  est_ = estimation::fuse_position(est_, gps, delta, fusion_);

  t_ += world_.dynamics.dt;
}

TrajectoryRow VesselSim::row(const sim::ThrustCommand& cmd) const {
  TrajectoryRow r;
  r.t = t_;
  r.x = truth_.pose.x;
  r.y = truth_.pose.y;
  r.yaw = truth_.pose.yaw;
  r.est_x = est_.pose.x;
  r.est_y = est_.pose.y;
  r.est_yaw = est_.pose.yaw;
  r.surge = truth_.surge;
  r.yaw_rate = truth_.yaw_rate;
  r.thrust_l = cmd.left;
  r.thrust_r = cmd.right;
  return r;
}

MissionOutcome run_mission(const sim::World& world, const WaypointPath& path,
                           const RunnerConfig& cfg) {
  if (!path.valid()) throw std::invalid_argument("run_mission: invalid path");

  MissionOutcome out;
  VesselSim vsim(world, cfg.fusion);
  PursuitControllers ctls;
  ctls.heading.gains = cfg.heading_gains;
  ctls.cascade = cfg.cascade;

  double progress = 0.0;
  double total_len = path.total_length();
  size_t next_wp = 0;
  std::vector<double> hit_times;

  while (vsim.time() < cfg.timeout) {
    auto target = pure_pursuit_target(vsim.estimate().pose, path, progress);
    progress = target.progress;
    // Remaining work: arc still ahead on the path, or the straight-line
    // gap to the last waypoint when off-path near the end. On loop
    // missions (last waypoint == start) the arc term keeps the vessel
    // from idling at the start line.
    double dist_final =
        std::max(total_len - progress,
                 (path.waypoints.back() - vsim.estimate().pose.position()).norm());
    sim::ThrustCommand cmd =
        pure_pursuit_command(vsim.estimate().pose, vsim.measured_speed(), target.point,
                             dist_final, path.arrival_radius, cfg.pursuit, ctls, vsim.dt());
    vsim.apply(cmd);
    out.log.push_back(vsim.row(cmd));

    while (next_wp < path.waypoints.size() &&
           (path.waypoints[next_wp] - vsim.truth().pose.position()).norm() <=
               path.arrival_radius) {
      hit_times.push_back(vsim.time());
      ++next_wp;
    }
    if (next_wp == path.waypoints.size()) break;
  }

  out.success = next_wp == path.waypoints.size();
  if (!out.success) out.reason = "timeout before visiting all waypoints";
  out.metrics["waypoints_total"] = static_cast<double>(path.waypoints.size());
  out.metrics["waypoints_hit"] = static_cast<double>(next_wp);
  out.metrics["mission_time"] = vsim.time();
  out.series["waypoint_hit_times"] = hit_times;
  return out;
}

MissionOutcome station_keep(const sim::World& world, const Vec2& hold_point,
                            double duration, const RunnerConfig& cfg) {
  if (!(duration > 0.0)) throw std::invalid_argument("station_keep: duration must be > 0");

  MissionOutcome out;
  VesselSim vsim(world, cfg.fusion);
  control::HeadingController heading;
  heading.gains = cfg.heading_gains;
  control::CascadeState cascade_state;
  double heading_ref = vsim.estimate().pose.yaw;

  std::vector<double> errors;
  while (vsim.time() < duration) {
    const auto& est = vsim.estimate().pose;
    Vec2 to_hold = hold_point - est.position();
    // Re-aim only while meaningfully away; near the point the bearing is
    // ill-conditioned and the along-track loop handles the residual.
    if (to_hold.norm() > 1.0) heading_ref = std::atan2(to_hold.y, to_hold.x);

    auto [turn, hs] = control::heading_control(est.yaw, heading_ref, heading, vsim.dt());
    heading.state = hs;
    auto casc = control::cascade_position_control(est, hold_point, vsim.measured_speed(),
                                                  cfg.cascade, cascade_state, vsim.dt());
    cascade_state = casc.state;

    sim::ThrustCommand cmd = control::mix_thrust(casc.surge_effort, turn);
    vsim.apply(cmd);
    out.log.push_back(vsim.row(cmd));
    errors.push_back((hold_point - vsim.truth().pose.position()).norm());
  }

  double mean = 0.0, max_err = 0.0;
  for (double e : errors) {
    mean += e;
    max_err = std::max(max_err, e);
  }
  mean /= errors.empty() ? 1.0 : static_cast<double>(errors.size());

  size_t tail_begin = errors.size() / 2;
  double tail_mean = 0.0, tail_max = 0.0;
  for (size_t i = tail_begin; i < errors.size(); ++i) {
    tail_mean += errors[i];
    tail_max = std::max(tail_max, errors[i]);
  }
  tail_mean /= errors.size() > tail_begin
                   ? static_cast<double>(errors.size() - tail_begin)
                   : 1.0;

  out.success = true;
  out.metrics["mean_error"] = mean;
  out.metrics["max_error"] = max_err;
  out.metrics["tail_mean_error"] = tail_mean;
  out.metrics["tail_max_error"] = tail_max;
  out.series["hold_error"] = errors;
  return out;
}

MissionOutcome run_circle_totem(const sim::World& world, const Vec2& totem_center,
                                double R, double laps,
                                behaviors::RotationDirection direction,
                                const RunnerConfig& cfg) {
  if (!(R > 0.0)) throw std::invalid_argument("run_circle_totem: R must be > 0");

  MissionOutcome out;
  VesselSim vsim(world, cfg.fusion);
  behaviors::CirclingController ctl;

  auto vessel_theta = [&] {
    Vec2 r = vsim.estimate().pose.position() - totem_center;
    return std::atan2(r.y, r.x);
  };

  double theta_prev = vessel_theta();
  double unwrapped = 0.0;  // direction-signed angular progress
  double dir_sign = direction == behaviors::RotationDirection::counterclockwise ? 1.0 : -1.0;

  std::vector<double> d_series, phi_series, lap_series;
  while (vsim.time() < cfg.timeout && unwrapped < laps * 2.0 * kPi) {
    auto cstate = behaviors::circling_state(vsim.estimate().pose, totem_center, R, direction);
    auto [cmd, next_ctl] = behaviors::circling_command(cstate, ctl, vsim.dt());
    ctl = next_ctl;
    vsim.apply(cmd);
    out.log.push_back(vsim.row(cmd));

    double theta = vessel_theta();
    unwrapped += dir_sign * angle_diff(theta, theta_prev);
    theta_prev = theta;

    // Truth-based d for the metrics; control ran on the estimate.
    d_series.push_back((vsim.truth().pose.position() - totem_center).norm());
    phi_series.push_back(cstate.phi);
    lap_series.push_back(unwrapped / (2.0 * kPi));
  }

  out.success = unwrapped >= laps * 2.0 * kPi;
  if (!out.success) out.reason = "timeout before completing laps";
  out.metrics["laps_completed"] = unwrapped / (2.0 * kPi);
  out.metrics["commanded_radius"] = R;
  out.series["d"] = d_series;
  out.series["phi"] = phi_series;
  out.series["laps"] = lap_series;
  return out;
}

MissionOutcome run_dock_approach(const sim::World& world, const sim::Pose2D& dock_pose,
                                 const DockRunParams& params, const RunnerConfig& cfg) {
  MissionOutcome out;
  VesselSim vsim(world, cfg.fusion);

  Vec2 axis = dock_pose.heading_vec();
  auto along = [&](const Vec2& p) { return (p - dock_pose.position()).dot(axis); };
  auto lateral = [&](const Vec2& p) { return axis.cross(p - dock_pose.position()); };

  if (along(vsim.truth().pose.position()) >= 0.0) {
    throw std::invalid_argument("run_dock_approach: start must be outside the bay mouth");
  }

  double lateral_at_crossing = 0.0;
  bool crossed = false;
  std::vector<double> action_series;
  while (vsim.time() < cfg.timeout && !crossed) {
    auto action = behaviors::dock_policy(vsim.estimate().pose, dock_pose, params.policy);
    action_series.push_back(static_cast<double>(action));

    sim::ThrustCommand cmd;
    switch (action) {
      case behaviors::DockAction::go_straight:
        cmd = {params.straight_thrust, params.straight_thrust};
        break;
      case behaviors::DockAction::turn_left:
        cmd = {params.turn_thrust_inner, params.turn_thrust_outer};
        break;
      case behaviors::DockAction::turn_right:
        cmd = {params.turn_thrust_outer, params.turn_thrust_inner};
        break;
    }
    for (int k = 0; k < params.ticks_per_action && !crossed; ++k) {
      vsim.apply(cmd);
      out.log.push_back(vsim.row(cmd));
      if (along(vsim.truth().pose.position()) >= 0.0) {
        crossed = true;
        lateral_at_crossing = lateral(vsim.truth().pose.position());
      }
    }
  }

  out.success = crossed;
  if (!crossed) out.reason = "timeout before reaching the bay mouth";
  out.metrics["crossed"] = crossed ? 1.0 : 0.0;
  out.metrics["lateral_error"] = std::abs(lateral_at_crossing);
  out.metrics["approach_time"] = vsim.time();
  out.series["actions"] = action_series;
  return out;
}

MissionOutcome run_avoid_demo(const sim::World& world, const Vec2& goal,
                              const RunnerConfig& cfg) {
  MissionOutcome out;
  double clearance = world.vessel_radius + 0.5;
  auto tracks = planning::tracks_from_world(world, clearance);

  auto planned = planning::plan_min_angle(world.vessel_start.position(), goal, tracks);
  if (!planned) {
    out.reason = "planner failure";
    return out;
  }

  WaypointPath path;
  path.waypoints = planned->vertices;
  path.arrival_radius = 1.5;
  path.lookahead = 3.0;  // tighter than open-water cruising; detours are short
  out = run_mission(world, path, cfg);

  double min_clear = std::numeric_limits<double>::infinity();
  for (const auto& r : out.log) {
    for (const auto& obj : world.objects) {
      min_clear = std::min(min_clear, sim::distance_to_object({r.x, r.y}, obj));
    }
  }
  out.metrics["path_vertices"] = static_cast<double>(planned->vertices.size());
  out.metrics["path_length"] = planned->length();
  out.metrics["min_clearance"] =
      std::isfinite(min_clear) ? min_clear : -1.0;
  return out;
}

CirclingAnalysis analyze_circling(const MissionOutcome& outcome, double R,
                                  double band_fraction) {
  CirclingAnalysis a;
  auto d_it = outcome.series.find("d");
  auto lap_it = outcome.series.find("laps");
  if (d_it == outcome.series.end() || lap_it == outcome.series.end()) return a;
  const auto& d = d_it->second;
  const auto& laps = lap_it->second;
  if (d.empty() || d.size() != laps.size()) return a;

  double band = band_fraction * R;
  size_t conv = 0;  // first index of the final in-band run
  for (size_t i = 0; i < d.size(); ++i) {
    if (std::abs(d[i] - R) > band) conv = i + 1;
  }
  if (conv >= d.size()) return a;  // still out of band at the end

  a.converged = true;
  a.laps_at_convergence = laps[conv];
  a.band_laps = laps.back() - laps[conv];
  for (size_t i = conv; i < d.size(); ++i) {
    a.max_abs_dev_after = std::max(a.max_abs_dev_after, std::abs(d[i] - R));
  }
  return a;
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& log) {
  std::string csv = "t,x,y,yaw,est_x,est_y,est_yaw,surge,yaw_rate,thrust_l,thrust_r\n";
  char buf[320];
  for (const auto& r : log) {
    std::snprintf(buf, sizeof(buf),
                  "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.t, r.x, r.y,
                  r.yaw, r.est_x, r.est_y, r.est_yaw, r.surge, r.yaw_rate, r.thrust_l,
                  r.thrust_r);
    csv += buf;
  }
  return csv;
}

void save_trajectory_csv(const std::vector<TrajectoryRow>& log, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write trajectory csv: " + path);
  f << trajectory_csv(log);
}

}  // namespace usv::guidance
