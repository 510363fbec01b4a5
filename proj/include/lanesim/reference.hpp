#pragma once

#include <span>

#include "lanesim/kernel.hpp"
#include "lanesim/velocity.hpp"

// Serial reference implementations of the cell-loop kernels. Plain loops in
// textbook form, kept as the comparison baseline for the OpenMP kernels in
// lanesim::kernels (tests assert bit-identical output) and for the benchmark.

namespace lanesim::reference {

void convolve_into(std::span<double> out, std::span<const double> in, const DiscreteKernel& k,
                   bool periodic = false);

/// Full convective update of one lane with the Godunov flux, two flux
/// evaluations per cell.
void godunov_step(std::span<double> out, std::span<const double> rho, double lambda, int lane,
                  const VelocityModel& vel, bool periodic = false);

/// Full convective update of one lane with the nonlocal flux.
void nonlocal_step(std::span<double> out, std::span<const double> rho,
                   std::span<const double> conv, double lambda, int lane, const VelocityModel& vel,
                   bool periodic = false);

/// Relaxation update of one lane sitting between the given neighbours
/// (empty spans for the road edges).
void relaxation_step(std::span<double> out, std::span<const double> mid_prev,
                     std::span<const double> mid, std::span<const double> mid_next,
                     std::span<const double> conv_prev, std::span<const double> conv,
                     std::span<const double> conv_next, int lane, double dt,
                     const VelocityModel& vel);

}  // namespace lanesim::reference
