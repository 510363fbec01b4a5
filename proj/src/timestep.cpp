#include "lanesim/timestep.hpp"

#include <algorithm>
#include <cmath>

#include "lanesim/errors.hpp"

namespace lanesim {

double fixed_dt(const Grid1D& grid, const VelocityModel& vel, double cfl_cap) {
  const double speed = vel.cfl_speed();
  if (!(speed > 0.0)) {
    fail(Errc::DegenerateVelocity, "speed bound V_max + V'_max is zero");
  }
  return cfl_cap * grid.dx / speed;
}

double lane_speed_bound(const VelocityModel& vel, int lane, std::span<const double> args,
                        double fd_eps) {
  double vmax = 0.0;
  double qmax = 0.0;
  for (const double u : args) {
    vmax = std::max(vmax, std::abs(vel.velocity(lane, u)));
    const double hi = std::min(u + fd_eps, 1.0);
    const double lo = std::max(hi - fd_eps, 0.0);
    if (hi > lo) {
      qmax = std::max(qmax, std::abs(vel.velocity(lane, hi) - vel.velocity(lane, lo)) / (hi - lo));
    }
  }
  return vmax + qmax;
}

double adaptive_speed_bound(const VelocityModel& vel, const LaneGridState& state, double fd_eps) {
  double bound = 0.0;
  for (int j = 0; j < state.lanes; ++j) {
    bound = std::max(bound, lane_speed_bound(vel, j, state.lane(j), fd_eps));
  }
  return bound;
}

double adaptive_dt(const LaneGridState& state, const Grid1D& grid, const VelocityModel& vel,
                   double remaining, const CflController& ctrl) {
  const double speed = adaptive_speed_bound(vel, state, ctrl.fd_eps);
  if (!(speed > 0.0)) {
    fail(Errc::DegenerateVelocity, "sampled speed bound is zero");
  }
  return std::min(ctrl.cfl_cap * grid.dx / speed, remaining);
}

}  // namespace lanesim
