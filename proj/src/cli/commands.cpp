#include "usv/cli/commands.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "usv/agent/qlearning.hpp"
#include "usv/cli/svg_plot.hpp"
#include "usv/common/xyz_io.hpp"
#include "usv/guidance/mission.hpp"
#include "usv/perception/classifier.hpp"
#include "usv/perception/png_io.hpp"
#include "usv/perception/pipeline.hpp"
#include "usv/perception/synthetic.hpp"
#include "usv/planning/planner.hpp"

namespace usv::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::string out_dir = ".";
  bool quiet = false;
};

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

// Relative paths inside a config resolve against the config's directory.
std::string resolve_path(const std::string& ref, const std::string& config_path) {
  fs::path p(ref);
  if (p.is_absolute()) return ref;
  return (fs::path(config_path).parent_path() / p).string();
}

uint64_t required_seed(const json& cfg, const CommonArgs& args) {
  if (args.seed) return *args.seed;
  if (!cfg.contains("seed")) {
    throw ConfigError("config must contain a \"seed\" (or pass --seed)");
  }
  return cfg["seed"].get<uint64_t>();
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output dir: " + dir);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write: " + path);
  f << content;
}

Vec2 parse_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(std::string(what) + " must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// ------------------------------------------------------------------ run

guidance::RunnerConfig runner_config_from_json(const json& cfg) {
  guidance::RunnerConfig rc;
  rc.timeout = cfg.value("timeout", rc.timeout);
  if (!cfg.contains("gains")) return rc;
  const json& g = cfg["gains"];
  if (g.contains("heading")) {
    const json& h = g["heading"];
    rc.heading_gains.kp = h.value("kp", rc.heading_gains.kp);
    rc.heading_gains.ki = h.value("ki", rc.heading_gains.ki);
    rc.heading_gains.kd = h.value("kd", rc.heading_gains.kd);
  }
  if (g.contains("cascade")) {
    const json& c = g["cascade"];
    rc.cascade.outer_kp = c.value("outer_kp", rc.cascade.outer_kp);
    rc.cascade.v_max = c.value("v_max", rc.cascade.v_max);
    rc.cascade.inner.kp = c.value("inner_kp", rc.cascade.inner.kp);
    rc.cascade.inner.ki = c.value("inner_ki", rc.cascade.inner.ki);
  }
  if (g.contains("fusion")) {
    const json& f = g["fusion"];
    rc.fusion.position_gain = f.value("position_gain", rc.fusion.position_gain);
    rc.fusion.heading_gain = f.value("heading_gain", rc.fusion.heading_gain);
  }
  return rc;
}

int cmd_run(const CommonArgs& args) {
  json cfg = load_json_file(args.config_path);
  uint64_t seed = required_seed(cfg, args);

  if (!cfg.contains("world")) throw ConfigError("mission config needs \"world\"");
  sim::World world = sim::load_world(resolve_path(cfg["world"], args.config_path));
  world.noise.seed = seed;

  guidance::RunnerConfig rc = runner_config_from_json(cfg);
  if (!cfg.contains("behavior") || !cfg["behavior"].contains("type")) {
    throw ConfigError("mission config needs behavior.type");
  }
  const json& beh = cfg["behavior"];
  std::string type = beh["type"];

  guidance::MissionOutcome outcome;
  std::vector<Vec2> plot_waypoints;

  if (type == "waypoints") {
    guidance::WaypointPath path;
    for (const auto& w : beh.at("waypoints")) path.waypoints.push_back(parse_point(w, "waypoint"));
    path.lookahead = beh.value("lookahead", path.lookahead);
    path.arrival_radius = beh.value("arrival_radius", path.arrival_radius);
    rc.pursuit.cruise_speed = beh.value("cruise_speed", rc.pursuit.cruise_speed);
    if (!path.valid()) throw ConfigError("invalid waypoint path");
    plot_waypoints = path.waypoints;
    outcome = guidance::run_mission(world, path, rc);
  } else if (type == "station_keep") {
    Vec2 point = parse_point(beh.at("point"), "point");
    double duration = beh.value("duration", 120.0);
    plot_waypoints = {point};
    outcome = guidance::station_keep(world, point, duration, rc);
  } else if (type == "circle_totem") {
    Vec2 center;
    if (beh.contains("totem_id")) {
      int id = beh["totem_id"].get<int>();
      bool found = false;
      for (const auto& obj : world.objects) {
        if (obj.id == id) {
          center = obj.center;
          found = true;
        }
      }
      if (!found) throw ConfigError("circle_totem: no object with totem_id");
    } else {
      center = parse_point(beh.at("center"), "center");
    }
    double radius = beh.value("radius", 5.0);
    double laps = beh.value("laps", 33.0);
    auto dir = beh.value("direction", std::string("ccw")) == "cw"
                   ? behaviors::RotationDirection::clockwise
                   : behaviors::RotationDirection::counterclockwise;
    plot_waypoints = {center};
    outcome = guidance::run_circle_totem(world, center, radius, laps, dir, rc);
    auto analysis = guidance::analyze_circling(outcome, radius);
    outcome.metrics["converged"] = analysis.converged ? 1.0 : 0.0;
    outcome.metrics["laps_at_convergence"] = analysis.laps_at_convergence;
    outcome.metrics["band_laps"] = analysis.band_laps;
  } else if (type == "dock") {
    const json& dp = beh.at("dock_pose");
    sim::Pose2D dock_pose{dp.at("x").get<double>(), dp.at("y").get<double>(),
                          dp.at("yaw").get<double>()};
    guidance::DockRunParams params;
    plot_waypoints = {dock_pose.position()};
    outcome = guidance::run_dock_approach(world, dock_pose, params, rc);
  } else if (type == "avoid_demo") {
    Vec2 goal = parse_point(beh.at("goal"), "goal");
    plot_waypoints = {goal};
    outcome = guidance::run_avoid_demo(world, goal, rc);
    if (!outcome.success && outcome.reason == "planner failure") {
      json metrics{{"schema_version", 1}, {"command", "run"}, {"behavior", type},
                   {"success", false},   {"reason", outcome.reason}};
      ensure_out_dir(args.out_dir);
      write_file((fs::path(args.out_dir) / "metrics.json").string(), metrics.dump(2));
      if (!args.quiet) std::cerr << "planner failure\n";
      return kExitPlannerFailure;
    }
  } else {
    throw ConfigError("unknown behavior type: " + type);
  }

  ensure_out_dir(args.out_dir);
  guidance::save_trajectory_csv(outcome.log,
                                (fs::path(args.out_dir) / "trajectory.csv").string());
  save_trajectory_svg(world, outcome.log, plot_waypoints,
                      (fs::path(args.out_dir) / "trajectory.svg").string());

  json metrics;
  metrics["schema_version"] = 1;
  metrics["command"] = "run";
  metrics["behavior"] = type;
  metrics["success"] = outcome.success;
  metrics["reason"] = outcome.reason;
  metrics["seed"] = seed;
  for (const auto& [k, v] : outcome.metrics) metrics["metrics"][k] = v;
  if (auto it = outcome.series.find("waypoint_hit_times"); it != outcome.series.end()) {
    metrics["waypoint_hit_times"] = it->second;
  }
  write_file((fs::path(args.out_dir) / "metrics.json").string(), metrics.dump(2));

  if (!args.quiet) {
    std::cout << (outcome.success ? "success" : "failure: " + outcome.reason) << "\n";
  }
  return outcome.success ? kExitOk : kExitRunFailure;
}

// ---------------------------------------------------------- train / eval

agent::EnvConfig env_config_from_json(const json& cfg) {
  agent::EnvConfig ec;
  if (!cfg.contains("env")) return ec;
  const json& e = cfg["env"];
  ec.arena_size = e.value("arena_size", ec.arena_size);
  ec.obstacle_density = e.value("obstacle_density", ec.obstacle_density);
  ec.obstacle_radius_min = e.value("obstacle_radius_min", ec.obstacle_radius_min);
  ec.obstacle_radius_max = e.value("obstacle_radius_max", ec.obstacle_radius_max);
  ec.start_clear_radius = e.value("start_clear_radius", ec.start_clear_radius);
  ec.n_sectors = e.value("n_sectors", ec.n_sectors);
  ec.beams_per_sector = e.value("beams_per_sector", ec.beams_per_sector);
  ec.fov = e.value("fov", ec.fov);
  ec.sensor_range = e.value("sensor_range", ec.sensor_range);
  ec.ticks_per_step = e.value("ticks_per_step", ec.ticks_per_step);
  ec.step_limit = e.value("step_limit", ec.step_limit);
  ec.straight_thrust = e.value("straight_thrust", ec.straight_thrust);
  ec.turn_thrust_inner = e.value("turn_thrust_inner", ec.turn_thrust_inner);
  ec.turn_thrust_outer = e.value("turn_thrust_outer", ec.turn_thrust_outer);
  ec.vessel_radius = e.value("vessel_radius", ec.vessel_radius);
  return ec;
}

agent::DiscretizeParams discretize_from_json(const json& cfg) {
  agent::DiscretizeParams dp;
  if (cfg.contains("discretize") && cfg["discretize"].contains("edges")) {
    dp.edges = cfg["discretize"]["edges"].get<std::vector<double>>();
  }
  return dp;
}

int cmd_train(const CommonArgs& args) {
  json cfg = load_json_file(args.config_path);
  agent::EnvConfig env = env_config_from_json(cfg);

  agent::TrainConfig tc;
  tc.seed = required_seed(cfg, args);
  tc.discretize = discretize_from_json(cfg);
  if (cfg.contains("train")) {
    const json& t = cfg["train"];
    tc.episodes = t.value("episodes", tc.episodes);
    tc.q.alpha = t.value("alpha", tc.q.alpha);
    tc.q.gamma = t.value("gamma", tc.q.gamma);
    tc.epsilon_start = t.value("epsilon_start", tc.epsilon_start);
    tc.epsilon_decay = t.value("epsilon_decay", tc.epsilon_decay);
    tc.epsilon_min = t.value("epsilon_min", tc.epsilon_min);
  }

  agent::TrainResult result = agent::train(env, tc);

  int window = std::min<int>(100, static_cast<int>(result.curve.size()));
  double trailing = 0.0;
  for (int i = 0; i < window; ++i) {
    trailing += result.curve[result.curve.size() - 1 - i].steps;
  }
  trailing /= window > 0 ? window : 1;

  ensure_out_dir(args.out_dir);
  agent::save_qtable(result.table, (fs::path(args.out_dir) / "qtable.json").string());
  write_file((fs::path(args.out_dir) / "learning_curve.csv").string(),
             agent::learning_curve_csv(result.curve));

  json metrics;
  metrics["schema_version"] = 1;
  metrics["command"] = "train";
  metrics["episodes"] = tc.episodes;
  metrics["seed"] = tc.seed;
  metrics["trailing100_mean_steps"] = trailing;
  metrics["table_states"] = result.table.values.size();
  write_file((fs::path(args.out_dir) / "metrics.json").string(), metrics.dump(2));

  if (!args.quiet) {
    std::cout << "trained " << tc.episodes << " episodes, trailing-100 mean survival "
              << trailing << " steps\n";
  }
  return kExitOk;
}

int cmd_eval(const CommonArgs& args) {
  json cfg = load_json_file(args.config_path);
  uint64_t seed = required_seed(cfg, args);
  if (!cfg.contains("table")) throw ConfigError("eval config needs \"table\"");

  std::string table_path = resolve_path(cfg["table"], args.config_path);
  if (!fs::exists(table_path)) throw ConfigError("qtable not found: " + table_path);

  agent::QTable table = agent::load_qtable(table_path);
  agent::EnvConfig env = env_config_from_json(cfg);
  int episodes = cfg.value("episodes", 100);

  agent::EvalMetrics m =
      agent::evaluate_policy(table, env, episodes, seed, discretize_from_json(cfg));

  ensure_out_dir(args.out_dir);
  json metrics;
  metrics["schema_version"] = 1;
  metrics["command"] = "eval";
  metrics["seed"] = seed;
  metrics["episodes"] = m.episodes;
  metrics["mean_survival_steps"] = m.mean_survival_steps;
  metrics["collision_rate"] = m.collision_rate;
  metrics["turn_bias"] = m.turn_bias;
  metrics["mean_return"] = m.mean_return;
  write_file((fs::path(args.out_dir) / "metrics.json").string(), metrics.dump(2));

  if (!args.quiet) {
    std::cout << "eval: mean survival " << m.mean_survival_steps << " steps, collision rate "
              << m.collision_rate << ", turn bias " << m.turn_bias << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- dataset

struct DatasetSample {
  perception::ClassLabel label;
  int index = 0;
  sim::PointCloud scene;
  std::optional<perception::FlatImage> image;
};

int cmd_dataset(const CommonArgs& args, int jobs) {
  json cfg = load_json_file(args.config_path);
  uint64_t seed = required_seed(cfg, args);

  int samples_per_class = cfg.value("samples_per_class", 200);
  double train_fraction = cfg.value("train_fraction", 0.5);
  int png_samples = cfg.value("png_samples", 2);
  if (samples_per_class < 2) throw ConfigError("samples_per_class must be >= 2");

  perception::SceneParams scene;
  if (cfg.contains("scene")) {
    const json& s = cfg["scene"];
    scene.range_min = s.value("range_min", scene.range_min);
    scene.range_max = s.value("range_max", scene.range_max);
    scene.object_points_ref = s.value("object_points_ref", scene.object_points_ref);
    scene.sea_points = s.value("sea_points", scene.sea_points);
    scene.noise_sigma = s.value("noise_sigma", scene.noise_sigma);
  }

  std::vector<DatasetSample> samples(4 * samples_per_class);
  auto make_sample = [&](size_t flat_index) {
    auto label = perception::kAllClasses[flat_index / samples_per_class];
    int i = static_cast<int>(flat_index % samples_per_class);
    uint64_t sample_seed = derive_seed(seed, sim::to_string(label), i);
    RngStream rng(sample_seed);

    DatasetSample s;
    s.label = label;
    s.index = i;
    s.scene = perception::synthesize_scene(label, rng, scene).cloud;

    perception::PipelineParams pp;
    pp.ransac.seed = derive_seed(sample_seed, "ransac");
    auto res = perception::run_pipeline(s.scene, pp);
    if (res.ok) s.image = perception::flatten(res.object_cloud, {});
    samples[flat_index] = std::move(s);
  };

  if (jobs > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < samples.size(); i = next.fetch_add(1)) {
          make_sample(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < samples.size(); ++i) make_sample(i);
  }

  // Write clouds and example PNGs.
  ensure_out_dir(args.out_dir);
  char name[64];
  for (const auto& s : samples) {
    fs::path class_dir = fs::path(args.out_dir) / sim::to_string(s.label);
    ensure_out_dir(class_dir.string());
    std::snprintf(name, sizeof(name), "sample_%04d.xyz", s.index);
    save_xyz(s.scene, (class_dir / name).string());
    if (s.image && s.index < png_samples) {
      std::snprintf(name, sizeof(name), "sample_%04d.png", s.index);
      perception::write_flat_image_png(*s.image, (class_dir / name).string());
      perception::write_flat_image_sidecar(*s.image, (class_dir / name).string());
    }
  }

  // Train / held-out split per class, in sample order.
  int n_train = std::max(1, static_cast<int>(samples_per_class * train_fraction));
  std::vector<std::pair<perception::ClassLabel, perception::FlatImage>> train_set;
  int pipeline_failures = 0;
  for (const auto& s : samples) {
    if (!s.image) {
      ++pipeline_failures;
      continue;
    }
    if (s.index < n_train) train_set.emplace_back(s.label, *s.image);
  }
  perception::CentroidModel model = perception::train_centroid_model(train_set);

  // Confusion over the held-out remainder; pipeline failures count as
  // errors against their true class.
  int confusion[4][4] = {};
  int failed_eval[4] = {};
  int correct = 0, total = 0;
  for (const auto& s : samples) {
    if (s.index < n_train) continue;
    ++total;
    if (!s.image) {
      ++failed_eval[static_cast<int>(s.label)];
      continue;
    }
    auto cls = perception::classify(model, *s.image);
    ++confusion[static_cast<int>(s.label)][static_cast<int>(cls.label)];
    if (cls.label == s.label) ++correct;
  }
  double accuracy = total > 0 ? static_cast<double>(correct) / total : 0.0;

  std::string csv = "class,pred_obstacle_buoy,pred_totem_buoy,pred_dock,pred_deliver_box,pipeline_failed\n";
  for (int c = 0; c < 4; ++c) {
    csv += sim::to_string(static_cast<perception::ClassLabel>(c));
    for (int p = 0; p < 4; ++p) csv += "," + std::to_string(confusion[c][p]);
    csv += "," + std::to_string(failed_eval[c]) + "\n";
  }
  write_file((fs::path(args.out_dir) / "confusion_matrix.csv").string(), csv);
  perception::save_centroid_model(model, (fs::path(args.out_dir) / "model.json").string());

  json metrics;
  metrics["schema_version"] = 1;
  metrics["command"] = "dataset";
  metrics["seed"] = seed;
  metrics["samples_per_class"] = samples_per_class;
  metrics["train_per_class"] = n_train;
  metrics["held_out_total"] = total;
  metrics["accuracy"] = accuracy;
  metrics["pipeline_failures"] = pipeline_failures;
  write_file((fs::path(args.out_dir) / "metrics.json").string(), metrics.dump(2));

  if (!args.quiet) {
    std::cout << "dataset: " << samples.size() << " clouds, held-out accuracy " << accuracy
              << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- classify

int cmd_classify(const std::string& model_path, const std::string& input_path,
                 const std::string& out_dir, bool quiet, std::optional<uint64_t> seed) {
  if (!fs::exists(model_path)) throw ConfigError("model not found: " + model_path);
  if (!fs::exists(input_path)) throw ConfigError("input cloud not found: " + input_path);

  perception::CentroidModel model = perception::load_centroid_model(model_path);
  sim::PointCloud cloud = load_xyz(input_path);

  perception::PipelineParams pp;
  pp.ransac.seed = seed.value_or(1);
  auto res = perception::run_pipeline(cloud, pp);
  if (!res.ok) {
    std::cerr << json{{"error", "pipeline: " + res.error}}.dump() << "\n";
    return kExitRunFailure;
  }

  perception::FlatImage image = perception::flatten(res.object_cloud, {});
  auto cls = perception::classify(model, image);

  ensure_out_dir(out_dir);
  perception::write_flat_image_png(image, (fs::path(out_dir) / "flat.png").string());
  perception::write_flat_image_sidecar(image, (fs::path(out_dir) / "flat.png").string());

  json result;
  result["schema_version"] = 1;
  result["command"] = "classify";
  result["label"] = sim::to_string(cls.label);
  result["score"] = cls.score;
  for (size_t i = 0; i < 4; ++i) {
    result["distances"][sim::to_string(static_cast<perception::ClassLabel>(i))] =
        cls.distances[i];
  }
  write_file((fs::path(out_dir) / "classification.json").string(), result.dump(2));

  if (!quiet) std::cout << sim::to_string(cls.label) << " score " << cls.score << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------- plan

int cmd_plan(const CommonArgs& args) {
  json cfg = load_json_file(args.config_path);
  if (!cfg.contains("world")) throw ConfigError("plan config needs \"world\"");
  sim::World world = sim::load_world(resolve_path(cfg["world"], args.config_path));

  Vec2 start = cfg.contains("start") ? parse_point(cfg["start"], "start")
                                     : world.vessel_start.position();
  Vec2 goal = parse_point(cfg.at("goal"), "goal");
  double clearance = cfg.value("clearance", world.vessel_radius + 0.5);

  auto tracks = planning::tracks_from_world(world, clearance);
  auto path = planning::plan_min_angle(start, goal, tracks);

  ensure_out_dir(args.out_dir);
  if (!path) {
    write_file((fs::path(args.out_dir) / "metrics.json").string(),
               json{{"schema_version", 1},
                    {"command", "plan"},
                    {"success", false},
                    {"reason", "planner failure"}}
                   .dump(2));
    if (!args.quiet) std::cerr << "planner failure\n";
    return kExitPlannerFailure;
  }

  std::string csv = "x,y\n";
  char buf[80];
  for (const auto& v : path->vertices) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f\n", v.x, v.y);
    csv += buf;
  }
  write_file((fs::path(args.out_dir) / "path.csv").string(), csv);
  write_file((fs::path(args.out_dir) / "metrics.json").string(),
             json{{"schema_version", 1},
                  {"command", "plan"},
                  {"success", true},
                  {"vertices", path->vertices.size()},
                  {"length", path->length()}}
                 .dump(2));

  if (!args.quiet) {
    std::cout << "path with " << path->vertices.size() << " vertices, length "
              << path->length() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"USV autonomy sandbox: deterministic marine simulator, controllers, "
               "perception and RL tooling"};
  app.require_subcommand(1);

  CommonArgs args;
  int jobs = 1;
  std::string model_path, input_path;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) {
      sub->add_option("--config", args.config_path, "JSON config path")->required();
    }
    sub->add_option("--seed", args.seed, "Override the config seed");
    sub->add_option("--out", args.out_dir, "Output directory (default .)");
    sub->add_flag("--quiet", args.quiet, "Suppress progress output");
  };

  CLI::App* run = app.add_subcommand("run", "Run a mission from a config");
  add_common(run, true);
  CLI::App* train = app.add_subcommand("train", "Train the avoidance agent");
  add_common(train, true);
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a trained Q-table");
  add_common(eval, true);
  CLI::App* dataset = app.add_subcommand("dataset", "Build and score a perception dataset");
  add_common(dataset, true);
  dataset->add_option("--jobs", jobs, "Worker threads for sample generation")
      ->check(CLI::PositiveNumber);
  CLI::App* classify = app.add_subcommand("classify", "Classify an XYZ cloud");
  classify->add_option("--model", model_path, "Centroid model JSON")->required();
  classify->add_option("--input", input_path, "Input XYZ cloud")->required();
  classify->add_option("--seed", args.seed, "RANSAC seed (default 1)");
  classify->add_option("--out", args.out_dir, "Output directory (default .)");
  classify->add_flag("--quiet", args.quiet, "Suppress output");
  CLI::App* plan = app.add_subcommand("plan", "Plan a path through a world");
  add_common(plan, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(args);
    if (train->parsed()) return cmd_train(args);
    if (eval->parsed()) return cmd_eval(args);
    if (dataset->parsed()) return cmd_dataset(args, jobs);
    if (classify->parsed()) {
      return cmd_classify(model_path, input_path, args.out_dir, args.quiet, args.seed);
    }
    if (plan->parsed()) return cmd_plan(args);
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitConfigError;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", std::string("config: ") + e.what()}}.dump() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitRunFailure;
  }
  return kExitConfigError;
}

}  // namespace usv::cli
