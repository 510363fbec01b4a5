#include "lanesim/reference.hpp"

#include <cassert>

#include "lanesim/flux.hpp"
#include "lanesim/source.hpp"

namespace lanesim::reference {

void convolve_into(std::span<double> out, std::span<const double> in, const DiscreteKernel& k,
                   bool periodic) {
  const int n = static_cast<int>(in.size());
  assert(out.size() == in.size());
  for (int c = 0; c < n; ++c) {
    double acc = 0.0;
    for (int h = k.h_lo; h <= k.h_hi; ++h) {
      int idx = c + h + 1;
      if (periodic) idx = (idx % n + n) % n;
      if (idx >= 0 && idx < n) {
        acc += k.gamma(h) * in[static_cast<size_t>(idx)];
      }
    }
    out[static_cast<size_t>(c)] = acc;
  }
}

void godunov_step(std::span<double> out, std::span<const double> rho, double lambda, int lane,
                  const VelocityModel& vel, bool periodic) {
  const int n = static_cast<int>(rho.size());
  assert(out.size() == rho.size());
  for (int k = 0; k < n; ++k) {
    const double um = k > 0 ? rho[static_cast<size_t>(k - 1)]
                            : (periodic ? rho[static_cast<size_t>(n - 1)] : 0.0);
    const double u = rho[static_cast<size_t>(k)];
    const double up = k + 1 < n ? rho[static_cast<size_t>(k + 1)]
                                : (periodic ? rho[0] : 0.0);
    out[static_cast<size_t>(k)] =
        u - lambda * (godunov_flux(u, up, lane, vel) - godunov_flux(um, u, lane, vel));
  }
}

void nonlocal_step(std::span<double> out, std::span<const double> rho,
                   std::span<const double> conv, double lambda, int lane, const VelocityModel& vel,
                   bool periodic) {
  const int n = static_cast<int>(rho.size());
  assert(out.size() == rho.size() && conv.size() == rho.size());
  for (int k = 0; k < n; ++k) {
    const double here = nonlocal_flux(rho[static_cast<size_t>(k)], conv[static_cast<size_t>(k)],
                                      lane, vel);
    double behind = 0.0;
    if (k > 0) {
      behind = nonlocal_flux(rho[static_cast<size_t>(k - 1)], conv[static_cast<size_t>(k - 1)],
                             lane, vel);
    } else if (periodic) {
      behind = nonlocal_flux(rho[static_cast<size_t>(n - 1)], conv[static_cast<size_t>(n - 1)],
                             lane, vel);
    }
    out[static_cast<size_t>(k)] = rho[static_cast<size_t>(k)] - lambda * (here - behind);
  }
}

void relaxation_step(std::span<double> out, std::span<const double> mid_prev,
                     std::span<const double> mid, std::span<const double> mid_next,
                     std::span<const double> conv_prev, std::span<const double> conv,
                     std::span<const double> conv_next, int lane, double dt,
                     const VelocityModel& vel) {
  const int n = static_cast<int>(mid.size());
  assert(out.size() == mid.size());
  for (int k = 0; k < n; ++k) {
    const double sp = mid_prev.empty()
                          ? 0.0
                          : source_rate(mid_prev[static_cast<size_t>(k)],
                                        mid[static_cast<size_t>(k)],
                                        conv_prev[static_cast<size_t>(k)],
                                        conv[static_cast<size_t>(k)], lane - 1, vel);
    const double sn = mid_next.empty()
                          ? 0.0
                          : source_rate(mid[static_cast<size_t>(k)],
                                        mid_next[static_cast<size_t>(k)],
                                        conv[static_cast<size_t>(k)],
                                        conv_next[static_cast<size_t>(k)], lane, vel);
    out[static_cast<size_t>(k)] = mid[static_cast<size_t>(k)] + dt * sp - dt * sn;
  }
}

}  // namespace lanesim::reference
