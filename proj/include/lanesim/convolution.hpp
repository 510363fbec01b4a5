#pragma once

#include <span>
#include <vector>

#include "lanesim/kernel.hpp"

namespace lanesim {

enum class BoundaryPolicy { ZeroPad, Periodic };

/// Result of the discrete convolution, together with the stencil that
/// produced it. Values stay in [0,1] whenever the input does.
struct ConvolvedField {
  std::vector<double> values;
  const DiscreteKernel* kernel = nullptr;
};

/// R_k = sum_h gamma_h r_{k+h+1} with out-of-domain cells read as zero
/// (ZeroPad) or wrapped around (Periodic). Rejects kernels whose stencil is
/// wider than the domain: the mesh is then too coarse for the nonlocal range.
ConvolvedField convolve(std::span<const double> r, const DiscreteKernel& kernel,
                        BoundaryPolicy boundary = BoundaryPolicy::ZeroPad);

/// sum_k |R_k - S_k| for the convolutions R, S of r and s. Bounded by
/// sum_k |r_k - s_k| (the L1 nonexpansiveness of the operator).
double l1_distance_of_convolutions(std::span<const double> r, std::span<const double> s,
                                   const DiscreteKernel& kernel,
                                   BoundaryPolicy boundary = BoundaryPolicy::ZeroPad);

}  // namespace lanesim
