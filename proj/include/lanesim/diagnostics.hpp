#pragma once

#include <limits>
#include <span>
#include <vector>

#include "lanesim/solver.hpp"
#include "lanesim/state.hpp"
#include "lanesim/velocity.hpp"

namespace lanesim {

/// dx-weighted L1 norm per lane.
std::vector<double> mass_per_lane(const LaneGridState& s, double dx);

/// Total variation per lane. In the truncated whole-line setting this
/// includes the jumps against the zero ghost cells on both ends; on a
/// periodic mesh the wrap-around jump is counted instead.
std::vector<double> tv_per_lane(const LaneGridState& s,
                                BoundaryMode boundary = BoundaryMode::ZeroPad);

/// Per-lane dx * sum_k |a - b| between two states on the same mesh.
std::vector<double> l1_distance(const LaneGridState& a, const LaneGridState& b, const Grid1D& ga,
                                const Grid1D& gb);
std::vector<double> l1_distance(const Snapshot& a, const Snapshot& b, const Grid1D& ga,
                                const Grid1D& gb);

/// sum over adjacent lane pairs of the dx-weighted L1 distance, the quantity
/// the a-priori lane-coupling estimate controls.
double adjacent_lane_l1(const LaneGridState& s, double dx);

/// Kruzkov entropy residual of one completed step at level c, local flux.
/// Nonpositive up to rounding for every cell; the sources are rebuilt from
/// the recorded intermediate state and must reproduce the step exactly
/// (anything else raises StateMismatch: the states are not from one step).
/// `exchange` holds the lane-change rates of the step (from
/// step_exchange_rates below).
void entropy_residual_local(std::span<double> out, const StepRecord& rec,
                            const std::vector<std::vector<double>>& exchange, double c,
                            const VelocityModel& vel);

/// Nonlocal-flux variant; cells whose convolution stencil reads the zero
/// padding are skipped (set to -inf): the inequality is stated on the whole
/// line. `margin_lo`/`margin_hi` come from entropy_margins below.
void entropy_residual_nonlocal(std::span<double> out, const StepRecord& rec,
                               const std::vector<std::vector<double>>& exchange, double c,
                               const VelocityModel& vel, int margin_lo, int margin_hi);

/// Rebuilds the per-pair exchange rates of a recorded step and verifies the
/// relaxation identity next = mid + dt*(S_{j-1} - S_j); raises StateMismatch
/// beyond 1e-13.
std::vector<std::vector<double>> step_exchange_rates(const StepRecord& rec,
                                                     const VelocityModel& vel);

/// First/last cell index whose nonlocal entropy residual is evaluated.
void entropy_margins(const StepRecord& rec, const DiscreteKernel& flux_kernel,
                     const DiscreteKernel* source_kernel, int& k_lo, int& k_hi);

struct EntropyReport {
  double max_residual = -std::numeric_limits<double>::infinity();
  int arg_lane = -1;
  int arg_cell = -1;
  long arg_step = -1;
  double arg_c = 0.0;
  long n_violations = 0;
  double tol = 1e-12;
};

/// Accumulates the residual sweep over a run via the step observer: feed
/// on_step from the solver callback. c levels are the fixed 21-point grid
/// plus any extra values handed in (typically the extremes of the initial
/// datum). The sweep runs parallel over c levels; max/argmax combination is
/// exact, so the report does not depend on the thread count.
class EntropyChecker {
public:
  EntropyChecker(const Grid1D& grid, const VelocityModel& vel, FluxMode flux, SourceMode source,
                 std::vector<double> extra_c = {}, double tol = 1e-12);

  void on_step(const StepRecord& rec);
  const EntropyReport& report() const { return report_; }
  std::span<const double> c_levels() const { return c_levels_; }

private:
  VelocityModel vel_;
  FluxMode flux_;
  SourceMode source_;
  DiscreteKernel flux_kernel_;
  DiscreteKernel source_kernel_;
  std::vector<double> c_levels_;
  EntropyReport report_;
  long step_index_ = 0;
  std::vector<std::vector<double>> residual_;  // per c level, lanes*cells
};

}  // namespace lanesim
