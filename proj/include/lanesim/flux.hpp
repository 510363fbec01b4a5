#pragma once

#include "lanesim/kernel.hpp"
#include "lanesim/velocity.hpp"

namespace lanesim {

/// Convective flux selection. The nonlocal variant evaluates the velocity on
/// the downstream convolution and requires a forward nonincreasing kernel.
struct FluxMode {
  enum class Kind { LocalGodunov, NonlocalDownstream };
  Kind kind = Kind::LocalGodunov;
  KernelSpec kernel{};  // NonlocalDownstream only

  bool nonlocal() const { return kind == Kind::NonlocalDownstream; }
};

/// Throws SemanticError unless the kernel family is admissible for the flux.
void validate_flux_kernel(const KernelSpec& spec);

/// Godunov flux for the unimodal lane flux f_j with sonic point theta_j:
///   F(u,w) = min{ f(min(u,theta)), f(max(w,theta)) }.
double godunov_flux(double u, double w, int lane, const VelocityModel& vel);

/// Nonlocal convective flux F = v_j(R_iota) * rho.
double nonlocal_flux(double rho, double r_iota, int lane, const VelocityModel& vel);

/// Kruzkov numerical entropy flux for the Godunov scheme:
///   F^c(u,w) = F(u v c, w v c) - F(u ^ c, w ^ c).
double kruzkov_flux_local(double u, double w, double c, int lane, const VelocityModel& vel);

/// Kruzkov numerical entropy flux for the nonlocal scheme, which collapses to
///   v_j(R_iota) * |u - c|.
double kruzkov_flux_nonlocal(double u, double c, double r_iota, int lane, const VelocityModel& vel);

}  // namespace lanesim
