#include "usv/control/pid.hpp"

#include <stdexcept>

namespace usv::control {

std::pair<double, PIDState> pid_step(const PIDGains& gains, const PIDState& state,
                                     double error, double dt) {
  if (!finite(error)) throw std::invalid_argument("pid_step: non-finite error");
  if (!(dt > 0.0)) throw std::invalid_argument("pid_step: dt must be > 0");

  PIDState next = state;
  next.integral = clamp(state.integral + error * dt, -gains.i_limit, gains.i_limit);
  double deriv = state.has_prev ? (error - state.prev_error) / dt : 0.0;
  next.prev_error = error;
  next.has_prev = true;

  double out = gains.kp * error + gains.ki * next.integral + gains.kd * deriv;
  return {clamp(out, -gains.out_limit, gains.out_limit), next};
}

}  // namespace usv::control
