#include "usv/agent/qlearning.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace usv::agent {

std::string discretize_observation(const std::vector<double>& observation,
                                   const DiscretizeParams& params) {
  if (params.bins() < 2) throw std::invalid_argument("discretize: need >= 2 bins");
  std::string key;
  key.reserve(observation.size());
  for (double r : observation) {
    int bucket = 0;
    // <= puts an exact edge value into the lower bucket.
    while (bucket < static_cast<int>(params.edges.size()) &&
           !(r <= params.edges[bucket])) {
      ++bucket;
    }
    key.push_back(static_cast<char>('0' + bucket));
  }
  return key;
}

namespace {
const std::array<double, kActionCount> kZeroRow{0.0, 0.0, 0.0};
}

const std::array<double, kActionCount>& QTable::row(const std::string& key) const {
  auto it = values.find(key);
  return it == values.end() ? kZeroRow : it->second;
}

std::array<double, kActionCount>& QTable::row_mut(const std::string& key) {
  return values.try_emplace(key, kZeroRow).first->second;
}

DiscreteAction greedy_action(const QTable& table, const std::string& key) {
  const auto& q = table.row(key);
  int best = 0;
  for (int a = 1; a < kActionCount; ++a) {
    if (q[a] > q[best]) best = a;  // strict >: ties keep the earlier action
  }
  return static_cast<DiscreteAction>(best);
}

void q_update(QTable& table, const std::string& key, DiscreteAction action, double reward,
              const std::string& next_key, bool terminal, const QParams& params) {
  if (!(params.alpha > 0.0) || params.alpha > 1.0 || params.gamma < 0.0 ||
      params.gamma >= 1.0) {
    throw std::invalid_argument("q_update: invalid params");
  }
  double bootstrap = 0.0;
  if (!terminal) {
    const auto& next_q = table.row(next_key);
    bootstrap = *std::max_element(next_q.begin(), next_q.end());
  }
  double& q = table.row_mut(key)[static_cast<int>(action)];
  q += params.alpha * (reward + params.gamma * bootstrap - q);
}

TrainResult train(const EnvConfig& env_config, const TrainConfig& cfg) {
  if (cfg.episodes < 1) throw std::invalid_argument("train: episodes must be >= 1");

  TrainResult result;
  AvoidanceEnv env(env_config);
  RngStream explore_rng(derive_seed(cfg.seed, "explore"));

  for (int ep = 0; ep < cfg.episodes; ++ep) {
    double epsilon =
        std::max(cfg.epsilon_min, cfg.epsilon_start * std::pow(cfg.epsilon_decay, ep));

    std::vector<double> obs = env.reset(derive_seed(cfg.seed, "episode", ep));
    std::string key = discretize_observation(obs, cfg.discretize);

    EpisodeStats stats;
    stats.episode = ep;
    stats.epsilon = epsilon;

    while (!env.done()) {
      DiscreteAction action = explore_rng.uniform() < epsilon
                                  ? static_cast<DiscreteAction>(explore_rng.uniform_int(0, 2))
                                  : greedy_action(result.table, key);
      AgentStep step = env.step(action);
      std::string next_key = discretize_observation(step.observation, cfg.discretize);
      q_update(result.table, key, action, step.reward, next_key, step.done, cfg.q);
      key = std::move(next_key);
      ++stats.steps;
      stats.return_sum += step.reward;
    }
    result.curve.push_back(stats);
  }
  return result;
}

EvalMetrics evaluate_policy(const QTable& table, const EnvConfig& env_config,
                            int n_episodes, uint64_t seed,
                            const DiscretizeParams& discretize) {
  if (n_episodes < 1) throw std::invalid_argument("evaluate_policy: episodes must be >= 1");

  EvalMetrics m;
  m.episodes = n_episodes;
  AvoidanceEnv env(env_config);
  long total_steps = 0, collisions = 0, lefts = 0, rights = 0;
  double total_return = 0.0;

  for (int ep = 0; ep < n_episodes; ++ep) {
    std::vector<double> obs = env.reset(derive_seed(seed, "eval", ep));
    bool collided = false;
    while (!env.done()) {
      DiscreteAction action = greedy_action(table, discretize_observation(obs, discretize));
      if (action == DiscreteAction::turn_left) ++lefts;
      if (action == DiscreteAction::turn_right) ++rights;
      AgentStep step = env.step(action);
      obs = std::move(step.observation);
      total_return += step.reward;
      ++total_steps;
      if (step.info.at("collision") > 0.0) collided = true;
    }
    if (collided) ++collisions;
  }

  m.mean_survival_steps = static_cast<double>(total_steps) / n_episodes;
  m.collision_rate = static_cast<double>(collisions) / n_episodes;
  m.turn_bias = (lefts + rights) == 0
                    ? 0.0
                    : std::abs(static_cast<double>(lefts - rights)) / (lefts + rights);
  m.mean_return = total_return / n_episodes;
  return m;
}

std::string qtable_to_json(const QTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, q] : table.values) {
    j[key] = {q[0], q[1], q[2]};
  }
  return j.dump(2);
}

QTable qtable_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  QTable table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& arr = it.value();
    if (!arr.is_array() || arr.size() != kActionCount) {
      throw std::runtime_error("qtable: row '" + it.key() + "' must have 3 values");
    }
    table.values[it.key()] = {arr[0].get<double>(), arr[1].get<double>(),
                              arr[2].get<double>()};
  }
  return table;
}

void save_qtable(const QTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write qtable: " + path);
  f << qtable_to_json(table);
}

QTable load_qtable(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open qtable: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return qtable_from_json(buf.str());
}

std::string learning_curve_csv(const std::vector<EpisodeStats>& curve) {
  std::string csv = "episode,steps,return,epsilon\n";
  char buf[128];
  for (const auto& s : curve) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.6f,%.6f\n", s.episode, s.steps, s.return_sum,
                  s.epsilon);
    csv += buf;
  }
  return csv;
}

}  // namespace usv::agent
