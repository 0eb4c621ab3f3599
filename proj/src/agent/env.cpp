#include "usv/agent/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace usv::agent {

const char* to_string(DiscreteAction a) {
  switch (a) {
    case DiscreteAction::go_straight: return "go_straight";
    case DiscreteAction::turn_left: return "turn_left";
    case DiscreteAction::turn_right: return "turn_right";
  }
  return "unknown";
}

double reward_fn(const std::vector<double>&, DiscreteAction action, bool collided) {
  if (collided) return -100.0;
  return action == DiscreteAction::go_straight ? 1.0 : 0.2;
}

AvoidanceEnv::AvoidanceEnv(const EnvConfig& config) : config_(config) {
  if (config.n_sectors < 1 || config.beams_per_sector < 1 || config.ticks_per_step < 1 ||
      config.step_limit < 1 || !(config.arena_size > 0.0)) {
    throw std::invalid_argument("AvoidanceEnv: invalid config");
  }
}

std::vector<double> AvoidanceEnv::reset(uint64_t seed) {
  world_ = sim::World{};
  world_.dynamics = config_.dynamics;
  world_.vessel_radius = config_.vessel_radius;

  RngStream rng(derive_seed(seed, "obstacle_field"));
  double half = 0.5 * config_.arena_size;
  int count = static_cast<int>(config_.obstacle_density * config_.arena_size *
                               config_.arena_size);
  int id = 1;
  for (int i = 0; i < count; ++i) {
    sim::WorldObject obj;
    obj.id = id++;
    obj.kind = sim::ObjectKind::obstacle_buoy;
    obj.shape = sim::ShapeKind::circle;
    obj.center = {rng.uniform(-half, half), rng.uniform(-half, half)};
    obj.radius = rng.uniform(config_.obstacle_radius_min, config_.obstacle_radius_max);
    obj.height = 1.0;
    if (obj.center.norm() < config_.start_clear_radius + obj.radius) continue;
    world_.objects.push_back(obj);
  }

  vessel_ = sim::VesselState{};
  vessel_.pose = sim::Pose2D{0.0, 0.0, rng.uniform(-kPi, kPi)};
  world_.vessel_start = vessel_.pose;

  done_ = false;
  steps_ = 0;
  return observe();
}

std::vector<double> AvoidanceEnv::observe() const {
  int beams = config_.n_sectors * config_.beams_per_sector;
  sim::RangeScan scan =
      sim::sample_range_scan(world_, vessel_, beams, config_.fov, config_.sensor_range);

  // Min-pool each sector: the nearest return wins, which is what the
  // avoidance policy has to react to.
  std::vector<double> obs(config_.n_sectors, config_.sensor_range);
  for (int i = 0; i < beams; ++i) {
    int sector = i / config_.beams_per_sector;
    obs[sector] = std::min(obs[sector], scan.ranges[i]);
  }
  return obs;
}

AgentStep AvoidanceEnv::step(DiscreteAction action) {
  if (done_) throw std::logic_error("AvoidanceEnv::step called after done");

  sim::ThrustCommand cmd;
  switch (action) {
    case DiscreteAction::go_straight:
      cmd = {config_.straight_thrust, config_.straight_thrust};
      break;
    case DiscreteAction::turn_left:
      cmd = {config_.turn_thrust_inner, config_.turn_thrust_outer};
      break;
    case DiscreteAction::turn_right:
      cmd = {config_.turn_thrust_outer, config_.turn_thrust_inner};
      break;
  }

  bool collided = false;
  for (int k = 0; k < config_.ticks_per_step && !collided; ++k) {
    vessel_ = sim::step_dynamics(vessel_, cmd, world_.dynamics.dt, world_.dynamics);
    collided = sim::check_collision(world_, vessel_);
  }
  ++steps_;

  AgentStep out;
  out.observation = observe();
  out.reward = reward_fn(out.observation, action, collided);
  bool step_limit = steps_ >= config_.step_limit;
  out.done = collided || step_limit;
  out.info["collision"] = collided ? 1.0 : 0.0;
  out.info["steps"] = steps_;
  out.info["success"] = (!collided && step_limit) ? 1.0 : 0.0;
  done_ = out.done;
  return out;
}

}  // namespace usv::agent
