#include "lanesim/step_kernels.hpp"

#include <algorithm>
#include <cassert>

#include "lanesim/flux.hpp"
#include "lanesim/parallel.hpp"
#include "lanesim/source.hpp"

namespace lanesim::kernels {

void convolve_into(std::span<double> out, std::span<const double> in, const DiscreteKernel& k,
                   bool periodic) {
  const int n = static_cast<int>(in.size());
  assert(out.size() == in.size());
  assert(k.width() <= n);
  if (periodic) {
    parallel_for(n, [&](int c) {
      double acc = 0.0;
      for (int h = k.h_lo; h <= k.h_hi; ++h) {
        const int idx = ((c + h + 1) % n + n) % n;
        acc += k.gamma(h) * in[static_cast<size_t>(idx)];
      }
      out[static_cast<size_t>(c)] = acc;
    });
    return;
  }
  parallel_for(n, [&](int c) {
    // clamp the stencil to in-domain reads; skipped cells are the zero pads
    const int h_lo = std::max(k.h_lo, -c - 1);
    const int h_hi = std::min(k.h_hi, n - c - 2);
    double acc = 0.0;
    for (int h = h_lo; h <= h_hi; ++h) {
      acc += k.gamma(h) * in[static_cast<size_t>(c + h + 1)];
    }
    out[static_cast<size_t>(c)] = acc;
  });
}

void godunov_interface_fluxes(std::span<double> iface, std::span<const double> rho, int lane,
                              const VelocityModel& vel, bool periodic) {
  const int n = static_cast<int>(rho.size());
  assert(static_cast<int>(iface.size()) == n + 1);
  parallel_for(n + 1, [&](int i) {
    double left, right;
    if (periodic) {
      left = rho[static_cast<size_t>((i - 1 + n) % n)];
      right = rho[static_cast<size_t>(i % n)];
    } else {
      left = i > 0 ? rho[static_cast<size_t>(i - 1)] : 0.0;
      right = i < n ? rho[static_cast<size_t>(i)] : 0.0;
    }
    iface[static_cast<size_t>(i)] = godunov_flux(left, right, lane, vel);
  });
}

void nonlocal_interface_fluxes(std::span<double> iface, std::span<const double> rho,
                               std::span<const double> conv, int lane, const VelocityModel& vel,
                               bool periodic) {
  const int n = static_cast<int>(rho.size());
  assert(static_cast<int>(iface.size()) == n + 1);
  assert(conv.size() == rho.size());
  parallel_for(n + 1, [&](int i) {
    if (periodic) {
      const int behind = (i - 1 + n) % n;
      iface[static_cast<size_t>(i)] = nonlocal_flux(rho[static_cast<size_t>(behind)],
                                                    conv[static_cast<size_t>(behind)], lane, vel);
    } else {
      iface[static_cast<size_t>(i)] =
          i > 0 ? nonlocal_flux(rho[static_cast<size_t>(i - 1)], conv[static_cast<size_t>(i - 1)],
                                lane, vel)
                : 0.0;
    }
  });
}

void conservative_update(std::span<double> out, std::span<const double> rho,
                         std::span<const double> iface, double lambda) {
  const int n = static_cast<int>(rho.size());
  assert(out.size() == rho.size());
  assert(static_cast<int>(iface.size()) == n + 1);
  parallel_for(n, [&](int k) {
    out[static_cast<size_t>(k)] =
        rho[static_cast<size_t>(k)] -
        lambda * (iface[static_cast<size_t>(k + 1)] - iface[static_cast<size_t>(k)]);
  });
}

void lane_exchange_rates(std::span<double> s, std::span<const double> rho_j,
                         std::span<const double> rho_j1, std::span<const double> conv_j,
                         std::span<const double> conv_j1, int lane, const VelocityModel& vel) {
  const int n = static_cast<int>(rho_j.size());
  assert(s.size() == rho_j.size() && rho_j1.size() == rho_j.size());
  parallel_for(n, [&](int k) {
    s[static_cast<size_t>(k)] =
        source_rate(rho_j[static_cast<size_t>(k)], rho_j1[static_cast<size_t>(k)],
                    conv_j[static_cast<size_t>(k)], conv_j1[static_cast<size_t>(k)], lane, vel);
  });
}

void relaxation_update(std::span<double> out, std::span<const double> mid,
                       std::span<const double> s_prev, std::span<const double> s_next, double dt) {
  const int n = static_cast<int>(mid.size());
  assert(out.size() == mid.size());
  parallel_for(n, [&](int k) {
    const double sp = s_prev.empty() ? 0.0 : s_prev[static_cast<size_t>(k)];
    const double sn = s_next.empty() ? 0.0 : s_next[static_cast<size_t>(k)];
    out[static_cast<size_t>(k)] = mid[static_cast<size_t>(k)] + dt * sp - dt * sn;
  });
}

}  // namespace lanesim::kernels
