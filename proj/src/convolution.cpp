#include "lanesim/convolution.hpp"

#include <cmath>
#include <string>

#include "lanesim/errors.hpp"
#include "lanesim/step_kernels.hpp"

namespace lanesim {

ConvolvedField convolve(std::span<const double> r, const DiscreteKernel& kernel,
                        BoundaryPolicy boundary) {
  if (kernel.width() > static_cast<int>(r.size())) {
    fail(Errc::KernelWiderThanDomain,
         "stencil of " + std::to_string(kernel.width()) + " cells exceeds the domain of " +
             std::to_string(r.size()) + " cells");
  }
  ConvolvedField f;
  f.kernel = &kernel;
  f.values.resize(r.size());
  kernels::convolve_into(f.values, r, kernel, boundary == BoundaryPolicy::Periodic);
  return f;
}

double l1_distance_of_convolutions(std::span<const double> r, std::span<const double> s,
                                   const DiscreteKernel& kernel, BoundaryPolicy boundary) {
  if (r.size() != s.size()) {
    fail(Errc::LengthMismatch, "inputs of length " + std::to_string(r.size()) + " and " +
                                   std::to_string(s.size()));
  }
  const ConvolvedField cr = convolve(r, kernel, boundary);
  const ConvolvedField cs = convolve(s, kernel, boundary);
  double acc = 0.0;
  for (size_t k = 0; k < cr.values.size(); ++k) {
    acc += std::abs(cr.values[k] - cs.values[k]);
  }
  return acc;
}

}  // namespace lanesim
