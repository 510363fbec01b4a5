#pragma once

#include <span>

#include "lanesim/kernel.hpp"
#include "lanesim/state.hpp"
#include "lanesim/velocity.hpp"

namespace lanesim {

/// Where the lane-change rate evaluates its velocities: on a forward or
/// symmetric convolution of the density, or on the pointwise density itself.
struct SourceMode {
  enum class Kind { NonlocalForward, NonlocalSymmetric, Local };
  Kind kind = Kind::Local;
  KernelSpec kernel{};  // unused for Local

  bool nonlocal() const { return kind != Kind::Local; }
};

/// Exchange rate from lane j to lane j+1 (0-based pair index `lane`):
///   (v_{j+1}(R_{j+1}) - v_j(R_j))^+ rho_j (1 - rho_{j+1})
/// - (v_{j+1}(R_{j+1}) - v_j(R_j))^- rho_{j+1} (1 - rho_j).
/// The branch-free +/- form coincides with the case split at equal velocities
/// (both branches vanish there).
double source_rate(double rho_j, double rho_j1, double r_j, double r_j1, int lane,
                   const VelocityModel& vel);

/// Net source of lane j at one cell, S_{j-1} - S_j, with the closed-road rule
/// that the outermost exchanges vanish. `rho_col` and `conv_col` hold the
/// per-lane densities and convolution values at that cell.
double net_source_column(int lane, std::span<const double> rho_col,
                         std::span<const double> conv_col, const VelocityModel& vel);

/// Diagnostic: max over lanes/cells of |S_j| - V_max*(rho_j + rho_{j+1}).
/// Nonpositive by the source-term bound.
double source_bound_check(const LaneGridState& states, const LaneGridState& convs,
                          const VelocityModel& vel);
double source_bound_check(const LaneGridState& states,
                          const std::vector<std::vector<double>>& convs,
                          const VelocityModel& vel);

}  // namespace lanesim
