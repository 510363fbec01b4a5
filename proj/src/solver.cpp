#include "lanesim/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "lanesim/diagnostics.hpp"
#include "lanesim/errors.hpp"
#include "lanesim/step_kernels.hpp"

namespace lanesim {

namespace {

// Invariance and the entropy inequality are proved for lambda * V <= 1/2;
// the guard flags any step outside that regime instead of running it.
constexpr double kCflLimit = 0.5;
constexpr double kCflSlack = 1e-12;

void check_range(const LaneGridState& s, const char* stage) {
  for (int j = 0; j < s.lanes; ++j) {
    for (int k = 0; k < s.cells; ++k) {
      const double v = s.at(j, k);
      if (!(v >= 0.0 && v <= 1.0)) {
        fail(Errc::RangeViolation, std::string(stage) + " value " + std::to_string(v) +
                                       " at lane " + std::to_string(j + 1) + " cell " +
                                       std::to_string(k));
      }
    }
  }
}

}  // namespace

Stepper::Stepper(const Grid1D& grid, const VelocityModel& vel, FluxMode flux, SourceMode source)
    : grid_(grid), vel_(vel), flux_(flux), source_(source) {
  const int m = vel_.lane_count();
  if (flux_.nonlocal()) {
    validate_flux_kernel(flux_.kernel);
    flux_kernel_ = discretize_kernel(flux_.kernel, grid_.dx);
    if (flux_kernel_.width() > grid_.n_cells) {
      fail(Errc::KernelWiderThanDomain, "flux kernel stencil exceeds the domain");
    }
    flux_conv_.assign(static_cast<size_t>(m),
                      std::vector<double>(static_cast<size_t>(grid_.n_cells)));
  }
  if (source_.nonlocal()) {
    source_kernel_ = discretize_kernel(source_.kernel, grid_.dx);
    if (source_kernel_.width() > grid_.n_cells) {
      fail(Errc::KernelWiderThanDomain, "source kernel stencil exceeds the domain");
    }
  }
  source_conv_.assign(static_cast<size_t>(m),
                      std::vector<double>(static_cast<size_t>(grid_.n_cells)));
  iface_.resize(static_cast<size_t>(grid_.n_cells) + 1);
  if (m > 1) {
    exchange_.assign(static_cast<size_t>(m - 1),
                     std::vector<double>(static_cast<size_t>(grid_.n_cells)));
  }
}

void Stepper::compute_source_conv(const LaneGridState& from) {
  for (int j = 0; j < from.lanes; ++j) {
    std::span<const double> row = from.lane(j);
    if (source_.nonlocal()) {
      kernels::convolve_into(source_conv_[static_cast<size_t>(j)], row, source_kernel_,
                             grid_.periodic());
    } else {
      std::copy(row.begin(), row.end(), source_conv_[static_cast<size_t>(j)].begin());
    }
  }
}

double Stepper::select_dt(const LaneGridState& cur, const CflController& ctrl, double remaining) {
  if (ctrl.mode == CflController::Mode::Fixed) {
    return std::min(fixed_dt(grid_, vel_, ctrl.cfl_cap), remaining);
  }
  // per-step bound sampled at the nodal densities and at the convolution
  // values of the current level (both kinds of velocity argument occur)
  double bound = adaptive_speed_bound(vel_, cur, ctrl.fd_eps);
  std::vector<double> scratch;
  for (int j = 0; j < cur.lanes; ++j) {
    if (flux_.nonlocal()) {
      scratch.resize(static_cast<size_t>(grid_.n_cells));
      kernels::convolve_into(scratch, cur.lane(j), flux_kernel_, grid_.periodic());
      bound = std::max(bound, lane_speed_bound(vel_, j, scratch, ctrl.fd_eps));
    }
    if (source_.nonlocal()) {
      scratch.resize(static_cast<size_t>(grid_.n_cells));
      kernels::convolve_into(scratch, cur.lane(j), source_kernel_, grid_.periodic());
      bound = std::max(bound, lane_speed_bound(vel_, j, scratch, ctrl.fd_eps));
    }
  }
  if (!(bound > 0.0)) {
    fail(Errc::DegenerateVelocity, "sampled speed bound is zero");
  }
  return std::min(ctrl.cfl_cap * grid_.dx / bound, remaining);
}

void Stepper::advance(const LaneGridState& cur, double dt, LaneGridState& mid,
                      LaneGridState& next) {
  if (!(dt > 0.0)) {
    fail(Errc::CflViolation, "nonpositive dt " + std::to_string(dt));
  }
  const double lambda = dt / grid_.dx;
  const double courant = lambda * adaptive_speed_bound(vel_, cur, 1e-6);
  if (courant > kCflLimit + kCflSlack) {
    fail(Errc::CflViolation,
         "lambda * V = " + std::to_string(courant) + " exceeds " + std::to_string(kCflLimit));
  }

  const int m = cur.lanes;
  if (mid.lanes != m || mid.cells != cur.cells) mid = LaneGridState::zeros(m, cur.cells);
  if (next.lanes != m || next.cells != cur.cells) next = LaneGridState::zeros(m, cur.cells);

  // convective step; the nonlocal flux evaluates R^iota on the current level
  for (int j = 0; j < m; ++j) {
    if (flux_.nonlocal()) {
      kernels::convolve_into(flux_conv_[static_cast<size_t>(j)], cur.lane(j), flux_kernel_,
                             grid_.periodic());
      kernels::nonlocal_interface_fluxes(iface_, cur.lane(j), flux_conv_[static_cast<size_t>(j)],
                                         j, vel_, grid_.periodic());
    } else {
      kernels::godunov_interface_fluxes(iface_, cur.lane(j), j, vel_, grid_.periodic());
    }
    kernels::conservative_update(mid.lane(j), cur.lane(j), iface_, lambda);
  }
  check_range(mid, "convective step");

  // relaxation step; the source convolutions come from the intermediate level
  compute_source_conv(mid);
  for (int i = 0; i + 1 < m; ++i) {
    kernels::lane_exchange_rates(exchange_[static_cast<size_t>(i)], mid.lane(i), mid.lane(i + 1),
                                 source_conv_[static_cast<size_t>(i)],
                                 source_conv_[static_cast<size_t>(i + 1)], i, vel_);
  }
  const std::span<const double> none;
  for (int j = 0; j < m; ++j) {
    kernels::relaxation_update(next.lane(j), mid.lane(j),
                               j > 0 ? std::span<const double>(exchange_[static_cast<size_t>(j - 1)])
                                     : none,
                               j + 1 < m ? std::span<const double>(exchange_[static_cast<size_t>(j)])
                                         : none,
                               dt);
  }
  check_range(next, "relaxation step");

  mid.t = cur.t + 0.5 * dt;
  next.t = cur.t + dt;
}

void validate_config(const RunConfig& config) {
  if (config.lanes.empty()) {
    fail(Errc::SemanticError, "at least one lane required");
  }
  if (config.initial.size() != config.lanes.size()) {
    fail(Errc::SemanticError, "got " + std::to_string(config.initial.size()) +
                                  " initial profiles for " + std::to_string(config.lanes.size()) +
                                  " lanes");
  }
  if (config.grid.n_cells < 1) {
    fail(Errc::SemanticError, "grid not built");
  }
  if (!(config.t_end >= 0.0)) {
    fail(Errc::SemanticError, "t_end must be nonnegative");
  }
  if (config.timeseries_stride < 1) {
    fail(Errc::SchemaError, "timeseries_stride must be >= 1");
  }
  if (!(config.cfl.cfl_cap > 0.0) || config.cfl.cfl_cap > 0.5) {
    fail(Errc::SemanticError,
         "cfl_cap must lie in (0, 1/2]; the scheme's properties are proved in that regime");
  }
  if (!(config.cfl.fd_eps > 0.0)) {
    fail(Errc::SemanticError, "fd_eps must be positive");
  }
  for (const double ts : config.snapshot_times) {
    if (ts < 0.0 || ts > config.t_end) {
      fail(Errc::SnapshotTimeOutOfRange,
           "snapshot time " + std::to_string(ts) + " outside [0, " +
               std::to_string(config.t_end) + "]");
    }
  }

  double kernel_reach = 0.0;
  if (config.flux.nonlocal()) {
    validate_flux_kernel(config.flux.kernel);
    discretize_kernel(config.flux.kernel, config.grid.dx);
    kernel_reach = std::max(kernel_reach, config.flux.kernel.range);
  }
  if (config.source.nonlocal()) {
    const bool fwd = forward_family(config.source.kernel.family);
    if (config.source.kind == SourceMode::Kind::NonlocalForward && !fwd) {
      fail(Errc::SemanticError, "nonlocal_forward source requires a forward kernel family");
    }
    if (config.source.kind == SourceMode::Kind::NonlocalSymmetric && fwd) {
      fail(Errc::SemanticError, "nonlocal_symmetric source requires a symmetric kernel family");
    }
    discretize_kernel(config.source.kernel, config.grid.dx);
    kernel_reach = std::max(kernel_reach, config.source.kernel.range);
  }

  if (config.grid.periodic()) {
    return;  // wrap-around stencils, nothing can leave the domain
  }
  // Whole-line truncation: traffic only moves downstream, so the support
  // needs V_max*t_end plus the kernel reach of clearance ahead and the
  // kernel reach behind.
  const VelocityModel vel(config.lanes);
  int first = config.grid.n_cells, last = -1;
  for (size_t j = 0; j < config.initial.size(); ++j) {
    const std::vector<double> avg = cell_averages(config.initial[j], config.grid);
    for (int k = 0; k < config.grid.n_cells; ++k) {
      if (avg[static_cast<size_t>(k)] > 0.0) {
        first = std::min(first, k);
        last = std::max(last, k);
      }
    }
  }
  if (last >= 0) {
    const double left_margin = first * config.grid.dx;
    const double right_margin = (config.grid.n_cells - 1 - last) * config.grid.dx;
    const double needed_right = vel.max_velocity() * config.t_end + kernel_reach;
    if (right_margin + 1e-12 < needed_right || left_margin + 1e-12 < kernel_reach) {
      fail(Errc::SemanticError,
           "initial support too close to the domain edges (downstream margin " +
               std::to_string(right_margin) + " < " + std::to_string(needed_right) +
               " or upstream margin " + std::to_string(left_margin) + " < " +
               std::to_string(kernel_reach) + ")");
    }
  }
}

RunOutput run(const RunConfig& config, const StepObserver& observer) {
  validate_config(config);

  const VelocityModel vel(config.lanes);
  Stepper stepper(config.grid, vel, config.flux, config.source);
  LaneGridState state = init_from_profile(config.initial, config.grid);

  std::set<double> snapshot_set(config.snapshot_times.begin(), config.snapshot_times.end());
  std::set<double> targets = snapshot_set;
  targets.insert(config.t_end);

  RunOutput out;
  out.grid = config.grid;
  auto record_series = [&](const LaneGridState& s) {
    out.series.push_back(TimeSeriesRow{s.t, mass_per_lane(s, config.grid.dx),
                                       tv_per_lane(s, config.grid.boundary)});
  };
  record_series(state);
  if (snapshot_set.count(0.0) != 0 || config.t_end == 0.0) {
    out.snapshots.push_back(Snapshot{0.0, state});
  }

  LaneGridState mid, next;
  while (state.t < config.t_end) {
    const auto target_it = targets.upper_bound(state.t);
    const double target = target_it == targets.end() ? config.t_end : *target_it;
    const double remaining = target - state.t;
    const double dt = stepper.select_dt(state, config.cfl, remaining);

    stepper.advance(state, dt, mid, next);
    const bool landed = dt >= remaining || next.t >= target;
    if (landed) next.t = target;

    if (observer) {
      observer(StepRecord{state, mid, next, dt, config.grid.dx, config.grid.periodic(),
                          stepper.source_conv(),
                          config.flux.nonlocal() ? &stepper.flux_conv() : nullptr});
    }

    std::swap(state, next);
    ++out.steps;
    if (out.steps % config.timeseries_stride == 0 || landed) {
      record_series(state);
    }
    if (landed && snapshot_set.count(target) != 0) {
      out.snapshots.push_back(Snapshot{target, state});
    }
  }

  out.final_state = std::move(state);
  return out;
}

}  // namespace lanesim
