#pragma once

#include <span>
#include <vector>

namespace lanesim {

/// Cell-averaged densities for all lanes at one time level, row-major
/// [lane][cell]. Every entry stays in [0,1] along a run; the solver aborts
/// instead of clamping when a step leaves that set.
struct LaneGridState {
  double t = 0.0;
  int lanes = 0;
  int cells = 0;
  std::vector<double> rho;

  static LaneGridState zeros(int lanes, int cells) {
    LaneGridState s;
    s.lanes = lanes;
    s.cells = cells;
    s.rho.assign(static_cast<size_t>(lanes) * static_cast<size_t>(cells), 0.0);
    return s;
  }

  double& at(int j, int k) { return rho[static_cast<size_t>(j) * cells + k]; }
  double at(int j, int k) const { return rho[static_cast<size_t>(j) * cells + k]; }

  std::span<double> lane(int j) {
    return {rho.data() + static_cast<size_t>(j) * cells, static_cast<size_t>(cells)};
  }
  std::span<const double> lane(int j) const {
    return {rho.data() + static_cast<size_t>(j) * cells, static_cast<size_t>(cells)};
  }
};

}  // namespace lanesim
