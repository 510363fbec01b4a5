#pragma once

#include <span>

#include "lanesim/grid.hpp"
#include "lanesim/state.hpp"
#include "lanesim/velocity.hpp"

namespace lanesim {

/// Time-step selection policy. Every produced step keeps
/// (dt/dx) * V <= cfl_cap with V the speed bound in use: the global
/// V_max + V'_max in Fixed mode, a per-step bound sampled at the densities
/// (and convolution values) actually occurring in Adaptive mode.
struct CflController {
  enum class Mode { Fixed, Adaptive };
  Mode mode = Mode::Adaptive;
  double cfl_cap = 0.5;
  double fd_eps = 1e-6;  // increment of the one-sided difference quotient
};

/// dt = cfl_cap * dx / (V_max + V'_max) from the global bounds on [0,1].
double fixed_dt(const Grid1D& grid, const VelocityModel& vel, double cfl_cap = 0.5);

/// max |v_lane| + max difference quotient over the given argument values,
/// quotients taken on [u, u+fd_eps] clamped into [0,1].
double lane_speed_bound(const VelocityModel& vel, int lane, std::span<const double> args,
                        double fd_eps);

/// Per-step speed bound sampled at the nodal densities of `state`; callers
/// with nonlocal terms extend the argument set via lane_speed_bound.
double adaptive_speed_bound(const VelocityModel& vel, const LaneGridState& state, double fd_eps);

/// min(cfl_cap * dx / V^n, remaining); the clamp makes the final step land
/// exactly on the target time.
double adaptive_dt(const LaneGridState& state, const Grid1D& grid, const VelocityModel& vel,
                   double remaining, const CflController& ctrl = {});

}  // namespace lanesim
