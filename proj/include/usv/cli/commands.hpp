// Command-line entry point. Subcommands: run, train, eval, dataset,
// classify, plan. Exit codes: 0 success, 2 config error, 3 run failure,
// 4 planner failure.
#pragma once

namespace usv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRunFailure = 3;
inline constexpr int kExitPlannerFailure = 4;

int run_cli(int argc, const char* const* argv);

}  // namespace usv::cli
