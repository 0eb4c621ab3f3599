// Gym-style obstacle-avoidance environment over the simulator: reset
// regenerates a seeded random obstacle field, step applies one of three
// discrete actions for a few dynamics ticks and returns (observation,
// reward, done). The observation is a downsampled range scan.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "usv/common/rng.hpp"
#include "usv/sim/sensors.hpp"
#include "usv/sim/world.hpp"

namespace usv::agent {

enum class DiscreteAction { go_straight, turn_left, turn_right };

inline constexpr int kActionCount = 3;
const char* to_string(DiscreteAction a);

struct AgentStep {
  std::vector<double> observation;
  double reward = 0.0;
  bool done = false;
  std::map<std::string, double> info;
};

struct EnvConfig {
  double arena_size = 40.0;          // m, square side; obstacles spawn inside
  double obstacle_density = 0.02;    // obstacles per m^2
  double obstacle_radius_min = 0.5;  // m
  double obstacle_radius_max = 1.2;  // m
  double start_clear_radius = 5.0;   // m kept free around the start pose

  int n_sectors = 5;
  int beams_per_sector = 5;  // min-pooled into each sector
  double fov = kPi;          // rad, forward field of view
  double sensor_range = 20.0;

  int ticks_per_step = 5;
  int step_limit = 500;

  // Action -> thrust pairs. Turns are full-differential (near zero net
  // surge), which a coarse tabular policy needs to dodge reliably.
  double straight_thrust = 0.4;
  double turn_thrust_inner = -1.0;
  double turn_thrust_outer = 1.0;

  sim::DynamicsParams dynamics;
  double vessel_radius = 1.0;
};

// Rewards: collisions are heavily penalized and straight motion earns
// more than turning, which keeps the agent from spinning in place.
double reward_fn(const std::vector<double>& observation, DiscreteAction action,
                 bool collided);

class AvoidanceEnv {
 public:
  explicit AvoidanceEnv(const EnvConfig& config);

  // Regenerate the world from the seed and return the initial observation.
  std::vector<double> reset(uint64_t seed);

  // Throws std::logic_error when called on a finished episode.
  AgentStep step(DiscreteAction action);

  bool done() const { return done_; }
  int steps_taken() const { return steps_; }
  const sim::World& world() const { return world_; }
  const sim::VesselState& vessel() const { return vessel_; }
  const EnvConfig& config() const { return config_; }

 private:
  std::vector<double> observe() const;

  EnvConfig config_;
  sim::World world_;
  sim::VesselState vessel_;
  bool done_ = true;  // unusable until the first reset
  int steps_ = 0;
};

}  // namespace usv::agent
