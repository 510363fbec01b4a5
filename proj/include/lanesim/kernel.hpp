#pragma once

#include <string>
#include <vector>

namespace lanesim {

/// Analytic kernel families. All integrate to exactly 1 over their support.
///   ConstantForward          w(x) = 1/r          on [0, r]
///   LinearDecreasingForward  w(x) = 2(r-x)/r^2   on [0, r]
///   SymmetricLinear          w(x) = (r-|x|)/r^2  on [-r, r]
///   ConstantSymmetric        w(x) = 1/(2r)       on [-r, r]
enum class KernelFamily {
  ConstantForward,
  LinearDecreasingForward,
  SymmetricLinear,
  ConstantSymmetric,
};

struct KernelSpec {
  KernelFamily family = KernelFamily::ConstantForward;
  double range = 0.0;  // interaction radius, in units of x
};

/// Cell-averaged weights gamma_h over the stencil index set
///   h_lo = floor(inf spt w / dx),  h_hi = floor(sup spt w / dx) - 1.
/// Forward families give h in [0, r/dx - 1], symmetric families
/// h in [-r/dx, r/dx - 1]. The weights sum to 1 exactly up to rounding.
struct DiscreteKernel {
  std::vector<double> gammas;  // gammas[h - h_lo]
  int h_lo = 0;
  int h_hi = -1;

  int width() const { return static_cast<int>(gammas.size()); }
  double gamma(int h) const { return gammas[static_cast<size_t>(h - h_lo)]; }
};

bool forward_family(KernelFamily f);

/// Families admissible as a flux kernel: forward support and nonincreasing.
bool flux_admissible_family(KernelFamily f);

/// Analytic kernel value w(x); zero outside the support.
double kernel_value(const KernelSpec& spec, double x);

/// w(0): 1/r, 2/r, 1/r and 1/(2r) for the four families respectively.
double kernel_at_zero(const KernelSpec& spec);

/// Exact cell integrals of w over [h*dx, (h+1)*dx], computed from the
/// polynomial antiderivatives. Requires the range to be an integer multiple
/// of dx (within 1e-9 relative): truncating a partial tail cell would drop
/// kernel mass and break the unit-sum normalization.
DiscreteKernel discretize_kernel(const KernelSpec& spec, double dx);

/// Config spellings: constant_forward, linear_forward, linear_symmetric,
/// constant_symmetric.
const char* kernel_family_name(KernelFamily f);
KernelFamily kernel_family_from_name(const std::string& name);

}  // namespace lanesim
