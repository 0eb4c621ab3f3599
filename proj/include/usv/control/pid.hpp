// PID primitive. State is an explicit record; pid_step is a pure function
// over it so controllers can be rewound or run in parallel instances.
#pragma once

#include <utility>

#include "usv/common/geometry.hpp"

namespace usv::control {

struct PIDGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double i_limit = 1.0;    // absolute integrator clamp, > 0
  double out_limit = 1.0;  // absolute output clamp, > 0
};

struct PIDState {
  double integral = 0.0;
  double prev_error = 0.0;
  bool has_prev = false;

  void reset() { *this = PIDState{}; }
};

// One step of the update rule. The integrator is clamped (anti-windup)
// before the output clamp is applied. Derivative is the first difference
// of the error; zero on the first step. Throws on non-finite error or
// dt <= 0.
std::pair<double, PIDState> pid_step(const PIDGains& gains, const PIDState& state,
                                     double error, double dt);

}  // namespace usv::control
