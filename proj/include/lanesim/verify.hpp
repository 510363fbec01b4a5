#pragma once

#include <string>
#include <vector>

#include "lanesim/solver.hpp"

namespace lanesim {

struct CheckResult {
  std::string name;
  double max_violation = 0.0;  // <= 0 means the property held with margin
  double tolerance = 0.0;
  bool pass = true;
  /// Hard checks gate the verify exit code. Observation checks report
  /// discrete counterparts of continuous-level estimates that the scheme is
  /// not proved to satisfy exactly; they are informational.
  bool hard = true;
};

/// Runs the scenario once and evaluates every applicable discrete property:
/// invariance of [0,1], mass conservation, the entropy inequality for the
/// active flux mode, the TV growth bound in space, the time-Lipschitz bound,
/// the pointwise source bound, and the contraction-based observations.
std::vector<CheckResult> verify_run(const RunConfig& config);

bool all_hard_checks_pass(const std::vector<CheckResult>& checks);

}  // namespace lanesim
