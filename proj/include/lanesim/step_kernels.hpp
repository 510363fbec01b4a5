#pragma once

#include <span>

#include "lanesim/kernel.hpp"
#include "lanesim/velocity.hpp"

// Cell-loop kernels of the scheme, parallelized with OpenMP over cells.
// Every kernel writes one output element per index from inputs it does not
// alias, with a fixed inner summation order, so the parallel result is
// bit-identical to the serial reference in lanesim::reference.
//
// `periodic` selects the stencil topology: wrap-around reads instead of the
// zero ghost cells of the truncated whole-line setting.

namespace lanesim::kernels {

/// Discrete convolution R_k = sum_{h in [h_lo,h_hi]} gamma_h * r_{k+h+1},
/// ascending h; out-of-domain cells read as zero or wrap.
void convolve_into(std::span<double> out, std::span<const double> in, const DiscreteKernel& k,
                   bool periodic = false);

/// Godunov fluxes at the n+1 interfaces of one lane; iface[i] sits between
/// cells i-1 and i.
void godunov_interface_fluxes(std::span<double> iface, std::span<const double> rho, int lane,
                              const VelocityModel& vel, bool periodic = false);

/// Nonlocal fluxes: the flux carried across interface i is the outflow
/// v(conv[i-1]) * rho[i-1] of the cell behind it.
void nonlocal_interface_fluxes(std::span<double> iface, std::span<const double> rho,
                               std::span<const double> conv, int lane, const VelocityModel& vel,
                               bool periodic = false);

/// out_k = rho_k - lambda * (iface[k+1] - iface[k]).
void conservative_update(std::span<double> out, std::span<const double> rho,
                         std::span<const double> iface, double lambda);

/// Lane-change rates for one adjacent pair, per cell.
void lane_exchange_rates(std::span<double> s, std::span<const double> rho_j,
                         std::span<const double> rho_j1, std::span<const double> conv_j,
                         std::span<const double> conv_j1, int lane, const VelocityModel& vel);

/// out_k = mid_k + dt * s_prev_k - dt * s_next_k; an empty span reads as zero.
void relaxation_update(std::span<double> out, std::span<const double> mid,
                       std::span<const double> s_prev, std::span<const double> s_next, double dt);

}  // namespace lanesim::kernels
