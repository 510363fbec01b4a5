#include "lanesim/source.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lanesim/errors.hpp"

namespace lanesim {

double source_rate(double rho_j, double rho_j1, double r_j, double r_j1, int lane,
                   const VelocityModel& vel) {
  const double dv = vel.velocity(lane + 1, r_j1) - vel.velocity(lane, r_j);
  const double pos = std::max(dv, 0.0);
  const double neg = -std::min(dv, 0.0);
  return pos * rho_j * (1.0 - rho_j1) - neg * rho_j1 * (1.0 - rho_j);
}

double net_source_column(int lane, std::span<const double> rho_col,
                         std::span<const double> conv_col, const VelocityModel& vel) {
  const int m = static_cast<int>(rho_col.size());
  if (lane < 0 || lane >= m) {
    fail(Errc::LaneIndexOutOfRange, "lane " + std::to_string(lane) + " of " + std::to_string(m));
  }
  const double s_prev =
      lane > 0 ? source_rate(rho_col[lane - 1], rho_col[lane], conv_col[lane - 1], conv_col[lane],
                             lane - 1, vel)
               : 0.0;
  const double s_next =
      lane + 1 < m ? source_rate(rho_col[lane], rho_col[lane + 1], conv_col[lane],
                                 conv_col[lane + 1], lane, vel)
                   : 0.0;
  return s_prev - s_next;
}

namespace {

template <class ConvAt>
double source_bound_check_impl(const LaneGridState& states, const VelocityModel& vel,
                               ConvAt conv_at) {
  const double vmax = vel.max_velocity();
  if (states.lanes < 2 || states.cells == 0) return 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < states.lanes; ++j) {
    for (int k = 0; k < states.cells; ++k) {
      const double s = source_rate(states.at(j, k), states.at(j + 1, k), conv_at(j, k),
                                   conv_at(j + 1, k), j, vel);
      worst = std::max(worst, std::abs(s) - vmax * (states.at(j, k) + states.at(j + 1, k)));
    }
  }
  return worst;
}

}  // namespace

double source_bound_check(const LaneGridState& states, const LaneGridState& convs,
                          const VelocityModel& vel) {
  return source_bound_check_impl(states, vel, [&](int j, int k) { return convs.at(j, k); });
}

double source_bound_check(const LaneGridState& states,
                          const std::vector<std::vector<double>>& convs,
                          const VelocityModel& vel) {
  return source_bound_check_impl(states, vel, [&](int j, int k) {
    return convs[static_cast<size_t>(j)][static_cast<size_t>(k)];
  });
}

}  // namespace lanesim
