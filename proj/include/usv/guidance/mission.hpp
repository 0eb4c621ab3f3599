// Closed-loop mission runners: waypoint following, station keeping, totem
// circling, dock approach and a plan-then-follow avoidance demo. Every
// runner drives the same sense -> estimate -> decide -> actuate loop and
// returns a per-tick trajectory log plus behavior metrics.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "usv/behaviors/circling.hpp"
#include "usv/behaviors/docking.hpp"
#include "usv/estimation/fusion.hpp"
#include "usv/guidance/pure_pursuit.hpp"
#include "usv/sim/sensors.hpp"
#include "usv/sim/world.hpp"

namespace usv::guidance {

struct TrajectoryRow {
  double t = 0.0;
  double x = 0.0, y = 0.0, yaw = 0.0;
  double est_x = 0.0, est_y = 0.0, est_yaw = 0.0;
  double surge = 0.0, yaw_rate = 0.0;
  double thrust_l = 0.0, thrust_r = 0.0;
};

struct MissionOutcome {
  bool success = false;
  std::string reason;  // empty on success
  std::vector<TrajectoryRow> log;
  std::map<std::string, double> metrics;
  std::map<std::string, std::vector<double>> series;
};

struct RunnerConfig {
  estimation::FusionGains fusion;
  control::PIDGains heading_gains{1.2, 0.0, 0.3, 1.0, 1.0};
  control::CascadeGains cascade;
  PursuitParams pursuit;
  double timeout = 600.0;  // simulated seconds
};

// Truth propagation, sensor reads and pose fusion for one vessel.
class VesselSim {
 public:
  VesselSim(const sim::World& world, const estimation::FusionGains& fusion);

  // One dynamics tick followed by the sensor/fusion update.
  void apply(const sim::ThrustCommand& cmd);

  const sim::VesselState& truth() const { return truth_; }
  const estimation::PoseEstimate& estimate() const { return est_; }
  double time() const { return t_; }
  double dt() const { return world_.dynamics.dt; }
  double measured_speed() const { return truth_.surge; }
  bool collided() const { return sim::check_collision(world_, truth_); }
  const sim::World& world() const { return world_; }

  TrajectoryRow row(const sim::ThrustCommand& cmd) const;

 private:
  sim::World world_;
  sim::VesselState truth_;
  estimation::PoseEstimate est_;
  estimation::FusionGains fusion_;
  RngStream gps_rng_;
  RngStream compass_rng_;
  double t_ = 0.0;
};

// Drive the waypoint path with pure pursuit until every waypoint has been
// visited (in order, within arrival_radius of the truth pose) or the
// timeout elapses.
MissionOutcome run_mission(const sim::World& world, const WaypointPath& path,
                           const RunnerConfig& cfg);

// Hold a point with the cascade position controller for `duration`.
MissionOutcome station_keep(const sim::World& world, const Vec2& hold_point,
                            double duration, const RunnerConfig& cfg);

// Circle the totem at radius R until `laps` laps are complete (or timeout).
MissionOutcome run_circle_totem(const sim::World& world, const Vec2& totem_center,
                                double R, double laps,
                                behaviors::RotationDirection direction,
                                const RunnerConfig& cfg);

struct DockRunParams {
  behaviors::DockParams policy;
  double straight_thrust = 0.7;
  double turn_thrust_inner = 0.0;
  double turn_thrust_outer = 0.8;
  int ticks_per_action = 5;
};

// Approach the dock with the discrete 3-action policy until the vessel
// crosses the bay-mouth plane; reports the lateral error at the crossing.
MissionOutcome run_dock_approach(const sim::World& world, const sim::Pose2D& dock_pose,
                                 const DockRunParams& params, const RunnerConfig& cfg);

// Plan a minimum-angle path around the world objects, then follow it.
MissionOutcome run_avoid_demo(const sim::World& world, const Vec2& goal,
                              const RunnerConfig& cfg);

// Convergence bookkeeping over a circling run: when did |d - R| last
// leave the +-band_fraction*R band, and how many laps were spent inside
// it afterwards.
struct CirclingAnalysis {
  bool converged = false;           // entered the band and never left again
  double laps_at_convergence = 0.0;
  double band_laps = 0.0;           // laps completed inside the band
  double max_abs_dev_after = 0.0;   // max |d - R| after convergence
};

CirclingAnalysis analyze_circling(const MissionOutcome& outcome, double R,
                                  double band_fraction = 0.2);

// Trajectory CSV with the canonical header:
// t,x,y,yaw,est_x,est_y,est_yaw,surge,yaw_rate,thrust_l,thrust_r
std::string trajectory_csv(const std::vector<TrajectoryRow>& log);
void save_trajectory_csv(const std::vector<TrajectoryRow>& log, const std::string& path);

}  // namespace usv::guidance
