#include "lanesim/flux.hpp"

#include <algorithm>
#include <string>

#include "lanesim/errors.hpp"

namespace lanesim {

void validate_flux_kernel(const KernelSpec& spec) {
  if (!flux_admissible_family(spec.family)) {
    fail(Errc::SemanticError,
         std::string("flux kernel must be forward and nonincreasing; '") +
             kernel_family_name(spec.family) + "' is not");
  }
}

double godunov_flux(double u, double w, int lane, const VelocityModel& vel) {
  const double th = vel.theta(lane);
  return std::min(vel.flux(lane, std::min(u, th)), vel.flux(lane, std::max(w, th)));
}

double nonlocal_flux(double rho, double r_iota, int lane, const VelocityModel& vel) {
  return vel.velocity(lane, r_iota) * rho;
}

double kruzkov_flux_local(double u, double w, double c, int lane, const VelocityModel& vel) {
  return godunov_flux(std::max(u, c), std::max(w, c), lane, vel) -
         godunov_flux(std::min(u, c), std::min(w, c), lane, vel);
}

double kruzkov_flux_nonlocal(double u, double c, double r_iota, int lane,
                             const VelocityModel& vel) {
  return vel.velocity(lane, r_iota) * (std::max(u, c) - std::min(u, c));
}

}  // namespace lanesim
