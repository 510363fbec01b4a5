#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lanesim/convolution.hpp"
#include "lanesim/flux.hpp"
#include "lanesim/grid.hpp"
#include "lanesim/profiles.hpp"
#include "lanesim/source.hpp"
#include "lanesim/state.hpp"
#include "lanesim/timestep.hpp"
#include "lanesim/velocity.hpp"

namespace lanesim {

/// A complete scenario description; everything a run needs.
struct RunConfig {
  std::string name = "run";
  Grid1D grid;
  double t_end = 0.0;
  std::vector<LaneVelocity> lanes;
  FluxMode flux;
  SourceMode source;
  CflController cfl;
  std::vector<ProfileSpec> initial;     // one per lane
  std::vector<double> snapshot_times;   // hit exactly by step clamping
  int timeseries_stride = 1;            // record mass/TV every N steps
};

struct Snapshot {
  double t = 0.0;
  LaneGridState state;
};

struct TimeSeriesRow {
  double t = 0.0;
  std::vector<double> mass;  // per lane, dx-weighted
  std::vector<double> tv;    // per lane, incl. the zero ghost boundaries
};

struct RunOutput {
  Grid1D grid;
  std::vector<Snapshot> snapshots;
  std::vector<TimeSeriesRow> series;
  LaneGridState final_state;
  long steps = 0;
};

/// Everything one completed step exposes to an observer: the three state
/// levels, the convolution fields the step actually used, and dt. The
/// source convolutions are those of the intermediate state (one per lane;
/// for the local source variant they alias the intermediate densities).
struct StepRecord {
  const LaneGridState& prev;
  const LaneGridState& mid;
  const LaneGridState& next;
  double dt = 0.0;
  double dx = 0.0;
  bool periodic = false;
  const std::vector<std::vector<double>>& source_conv;
  const std::vector<std::vector<double>>* flux_conv = nullptr;  // null for the local flux
};

using StepObserver = std::function<void(const StepRecord&)>;

/// One step of the splitting scheme: convective update with the selected
/// flux, then the lane-change relaxation. Owns the reusable work buffers.
class Stepper {
public:
  Stepper(const Grid1D& grid, const VelocityModel& vel, FluxMode flux, SourceMode source);

  /// cur -> mid (convective) -> next (relaxation). Guards the CFL condition
  /// and aborts on any value leaving [0,1] instead of clamping.
  void advance(const LaneGridState& cur, double dt, LaneGridState& mid, LaneGridState& next);

  /// Step size per the controller; adaptive mode samples the nodal densities
  /// plus the convolution values present at the current time level.
  double select_dt(const LaneGridState& cur, const CflController& ctrl, double remaining);

  const std::vector<std::vector<double>>& source_conv() const { return source_conv_; }
  const std::vector<std::vector<double>>& flux_conv() const { return flux_conv_; }
  const VelocityModel& velocity() const { return vel_; }
  const Grid1D& grid() const { return grid_; }
  const FluxMode& flux_mode() const { return flux_; }
  const SourceMode& source_mode() const { return source_; }
  const DiscreteKernel& flux_kernel() const { return flux_kernel_; }
  const DiscreteKernel& source_kernel() const { return source_kernel_; }

private:
  void compute_source_conv(const LaneGridState& from);

  Grid1D grid_;
  VelocityModel vel_;
  FluxMode flux_;
  SourceMode source_;
  DiscreteKernel flux_kernel_;
  DiscreteKernel source_kernel_;
  std::vector<std::vector<double>> flux_conv_;
  std::vector<std::vector<double>> source_conv_;
  std::vector<double> iface_;
  std::vector<std::vector<double>> exchange_;
};

/// Raises on an inconsistent scenario: profile/lane count mismatch, snapshot
/// times outside [0, t_end], a symmetric flux kernel, a CFL cap beyond the
/// monotonicity regime, or initial support too close to the domain edges for
/// the whole-line truncation to be faithful (downstream margin of at least
/// V_max*t_end plus the kernel range; upstream margin of the kernel range).
void validate_config(const RunConfig& config);

/// Runs the scheme over [0, t_end]: snapshots at the requested times (exact
/// landing via clamped steps), mass/TV time series, deterministic output.
RunOutput run(const RunConfig& config, const StepObserver& observer = {});

}  // namespace lanesim
