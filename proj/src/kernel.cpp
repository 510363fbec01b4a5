#include "lanesim/kernel.hpp"

#include <cmath>
#include <string>

#include "lanesim/errors.hpp"

namespace lanesim {

bool forward_family(KernelFamily f) {
  return f == KernelFamily::ConstantForward || f == KernelFamily::LinearDecreasingForward;
}

bool flux_admissible_family(KernelFamily f) { return forward_family(f); }

double kernel_value(const KernelSpec& spec, double x) {
  const double r = spec.range;
  switch (spec.family) {
    case KernelFamily::ConstantForward:
      return (x >= 0.0 && x <= r) ? 1.0 / r : 0.0;
    case KernelFamily::LinearDecreasingForward:
      return (x >= 0.0 && x <= r) ? 2.0 * (r - x) / (r * r) : 0.0;
    case KernelFamily::SymmetricLinear:
      return (std::abs(x) <= r) ? (r - std::abs(x)) / (r * r) : 0.0;
    case KernelFamily::ConstantSymmetric:
      return (std::abs(x) <= r) ? 1.0 / (2.0 * r) : 0.0;
  }
  return 0.0;
}

double kernel_at_zero(const KernelSpec& spec) {
  switch (spec.family) {
    case KernelFamily::ConstantForward:
      return 1.0 / spec.range;
    case KernelFamily::LinearDecreasingForward:
      return 2.0 / spec.range;
    case KernelFamily::SymmetricLinear:
      return 1.0 / spec.range;
    case KernelFamily::ConstantSymmetric:
      return 1.0 / (2.0 * spec.range);
  }
  return 0.0;
}

DiscreteKernel discretize_kernel(const KernelSpec& spec, double dx) {
  if (!(spec.range > 0.0)) {
    fail(Errc::RangeTooSmall, "kernel range must be positive");
  }
  if (!(dx > 0.0)) {
    fail(Errc::InvalidCellWidth, "dx must be positive");
  }
  const double ratio = spec.range / dx;
  const long long m_ll = std::llround(ratio);
  if (m_ll < 1) {
    fail(Errc::RangeTooSmall, "kernel range " + std::to_string(spec.range) +
                                  " is below the cell width " + std::to_string(dx));
  }
  if (std::abs(ratio - static_cast<double>(m_ll)) > 1e-9 * std::max(1.0, ratio)) {
    fail(Errc::RangeNotMultipleOfDx, "kernel range " + std::to_string(spec.range) +
                                         " is not an integer multiple of dx " + std::to_string(dx));
  }
  const int m = static_cast<int>(m_ll);
  const double md = static_cast<double>(m);

  DiscreteKernel k;
  switch (spec.family) {
    case KernelFamily::ConstantForward:
      k.h_lo = 0;
      k.h_hi = m - 1;
      k.gammas.assign(static_cast<size_t>(m), 1.0 / md);
      break;
    case KernelFamily::LinearDecreasingForward:
      // integral of 2(r-z)/r^2 over [h dx, (h+1) dx] = (2m - 2h - 1)/m^2
      k.h_lo = 0;
      k.h_hi = m - 1;
      k.gammas.resize(static_cast<size_t>(m));
      for (int h = 0; h < m; ++h) {
        k.gammas[static_cast<size_t>(h)] = (2.0 * md - 2.0 * h - 1.0) / (md * md);
      }
      break;
    case KernelFamily::SymmetricLinear:
      // integral of (r-|z|)/r^2: (2m-2h-1)/(2m^2) for h >= 0, mirrored below 0
      k.h_lo = -m;
      k.h_hi = m - 1;
      k.gammas.resize(static_cast<size_t>(2 * m));
      for (int h = -m; h < m; ++h) {
        const double num = h >= 0 ? 2.0 * md - 2.0 * h - 1.0 : 2.0 * md + 2.0 * h + 1.0;
        k.gammas[static_cast<size_t>(h + m)] = num / (2.0 * md * md);
      }
      break;
    case KernelFamily::ConstantSymmetric:
      k.h_lo = -m;
      k.h_hi = m - 1;
      k.gammas.assign(static_cast<size_t>(2 * m), 1.0 / (2.0 * md));
      break;
  }
  return k;
}

const char* kernel_family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::ConstantForward:
      return "constant_forward";
    case KernelFamily::LinearDecreasingForward:
      return "linear_forward";
    case KernelFamily::SymmetricLinear:
      return "linear_symmetric";
    case KernelFamily::ConstantSymmetric:
      return "constant_symmetric";
  }
  return "?";
}

KernelFamily kernel_family_from_name(const std::string& name) {
  if (name == "constant_forward") return KernelFamily::ConstantForward;
  if (name == "linear_forward") return KernelFamily::LinearDecreasingForward;
  if (name == "linear_symmetric") return KernelFamily::SymmetricLinear;
  if (name == "constant_symmetric") return KernelFamily::ConstantSymmetric;
  fail(Errc::SchemaError, "unknown kernel family '" + name + "'");
}

}  // namespace lanesim
