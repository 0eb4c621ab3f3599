// Tabular Q-learning over a discretized range observation. The table maps
// a bucket-index key to one value per action; training runs seeded
// epsilon-greedy episodes on the avoidance environment.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "usv/agent/env.hpp"

namespace usv::agent {

struct DiscretizeParams {
  // Bucket edges in meters; b buckets need b-1 edges. A range exactly on
  // an edge falls into the lower bucket.
  std::vector<double> edges = {2.5, 7.0};

  int bins() const { return static_cast<int>(edges.size()) + 1; }
};

// Key = one digit per sector, lowest bucket is '0'.
std::string discretize_observation(const std::vector<double>& observation,
                                   const DiscretizeParams& params);

struct QParams {
  double alpha = 0.1;   // learning rate, (0, 1]
  double gamma = 0.95;  // discount, [0, 1)
};

struct QTable {
  std::map<std::string, std::array<double, kActionCount>> values;

  const std::array<double, kActionCount>& row(const std::string& key) const;
  std::array<double, kActionCount>& row_mut(const std::string& key);
};

// Greedy action with fixed tie-break order (straight, left, right), so a
// turn-only pathology is a property of the learned values, not of a
// random tie-break.
DiscreteAction greedy_action(const QTable& table, const std::string& key);

// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)); terminal
// transitions bootstrap with 0.
void q_update(QTable& table, const std::string& key, DiscreteAction action, double reward,
              const std::string& next_key, bool terminal, const QParams& params);

struct TrainConfig {
  int episodes = 2000;
  QParams q;
  double epsilon_start = 0.5;
  double epsilon_decay = 0.999;  // per episode
  double epsilon_min = 0.05;
  uint64_t seed = 1;
  DiscretizeParams discretize;
};

struct EpisodeStats {
  int episode = 0;
  int steps = 0;
  double return_sum = 0.0;
  double epsilon = 0.0;
};

struct TrainResult {
  QTable table;
  std::vector<EpisodeStats> curve;
};

TrainResult train(const EnvConfig& env_config, const TrainConfig& train_config);

struct EvalMetrics {
  int episodes = 0;
  double mean_survival_steps = 0.0;
  double collision_rate = 0.0;
  double turn_bias = 0.0;  // |#left - #right| / (#left + #right), 0 when no turns
  double mean_return = 0.0;
};

// Greedy rollouts on fresh seeds.
EvalMetrics evaluate_policy(const QTable& table, const EnvConfig& env_config,
                            int n_episodes, uint64_t seed,
                            const DiscretizeParams& discretize);

// QTable JSON: {"key": [q_straight, q_left, q_right], ...}.
std::string qtable_to_json(const QTable& table);
QTable qtable_from_json(const std::string& json_text);
void save_qtable(const QTable& table, const std::string& path);
QTable load_qtable(const std::string& path);

// Learning-curve CSV: episode,steps,return,epsilon.
std::string learning_curve_csv(const std::vector<EpisodeStats>& curve);

}  // namespace usv::agent
