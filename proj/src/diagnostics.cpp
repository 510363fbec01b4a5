#include "lanesim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "lanesim/errors.hpp"
#include "lanesim/flux.hpp"
#include "lanesim/parallel.hpp"
#include "lanesim/source.hpp"

namespace lanesim {

namespace {

double sgn0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void require_same_shape(const StepRecord& rec) {
  const bool ok = rec.prev.lanes == rec.mid.lanes && rec.mid.lanes == rec.next.lanes &&
                  rec.prev.cells == rec.mid.cells && rec.mid.cells == rec.next.cells;
  if (!ok) {
    fail(Errc::StateMismatch, "prev/mid/next shapes differ");
  }
}

}  // namespace

std::vector<double> mass_per_lane(const LaneGridState& s, double dx) {
  std::vector<double> out(static_cast<size_t>(s.lanes));
  for (int j = 0; j < s.lanes; ++j) {
    double acc = 0.0;
    for (const double v : s.lane(j)) acc += v;
    out[static_cast<size_t>(j)] = dx * acc;
  }
  return out;
}

std::vector<double> tv_per_lane(const LaneGridState& s, BoundaryMode boundary) {
  std::vector<double> out(static_cast<size_t>(s.lanes));
  const bool periodic = boundary == BoundaryMode::Periodic;
  for (int j = 0; j < s.lanes; ++j) {
    std::span<const double> row = s.lane(j);
    double acc = 0.0;
    for (size_t k = 0; k + 1 < row.size(); ++k) {
      acc += std::abs(row[k + 1] - row[k]);
    }
    if (!row.empty()) {
      if (periodic) {
        acc += std::abs(row.front() - row.back());
      } else {
        acc += std::abs(row.front()) + std::abs(row.back());
      }
    }
    out[static_cast<size_t>(j)] = acc;
  }
  return out;
}

std::vector<double> l1_distance(const LaneGridState& a, const LaneGridState& b, const Grid1D& ga,
                                const Grid1D& gb) {
  if (!ga.same_mesh(gb) || a.lanes != b.lanes || a.cells != b.cells || a.cells != ga.n_cells) {
    fail(Errc::GridMismatch, "snapshots live on different meshes");
  }
  std::vector<double> out(static_cast<size_t>(a.lanes));
  for (int j = 0; j < a.lanes; ++j) {
    double acc = 0.0;
    for (int k = 0; k < a.cells; ++k) {
      acc += std::abs(a.at(j, k) - b.at(j, k));
    }
    out[static_cast<size_t>(j)] = ga.dx * acc;
  }
  return out;
}

std::vector<double> l1_distance(const Snapshot& a, const Snapshot& b, const Grid1D& ga,
                                const Grid1D& gb) {
  return l1_distance(a.state, b.state, ga, gb);
}

double adjacent_lane_l1(const LaneGridState& s, double dx) {
  double acc = 0.0;
  for (int j = 0; j + 1 < s.lanes; ++j) {
    for (int k = 0; k < s.cells; ++k) {
      acc += std::abs(s.at(j + 1, k) - s.at(j, k));
    }
  }
  return dx * acc;
}

std::vector<std::vector<double>> step_exchange_rates(const StepRecord& rec,
                                                     const VelocityModel& vel) {
  require_same_shape(rec);
  const int m = rec.mid.lanes;
  const int n = rec.mid.cells;
  if (static_cast<int>(rec.source_conv.size()) != m) {
    fail(Errc::StateMismatch, "source convolution fields do not match the lane count");
  }
  std::vector<std::vector<double>> exchange(static_cast<size_t>(std::max(m - 1, 0)),
                                            std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i + 1 < m; ++i) {
    for (int k = 0; k < n; ++k) {
      exchange[static_cast<size_t>(i)][static_cast<size_t>(k)] = source_rate(
          rec.mid.at(i, k), rec.mid.at(i + 1, k), rec.source_conv[static_cast<size_t>(i)][static_cast<size_t>(k)],
          rec.source_conv[static_cast<size_t>(i + 1)][static_cast<size_t>(k)], i, vel);
    }
  }
  // the recorded triple must reproduce the relaxation identity
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < n; ++k) {
      const double sp = j > 0 ? exchange[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] : 0.0;
      const double sn = j + 1 < m ? exchange[static_cast<size_t>(j)][static_cast<size_t>(k)] : 0.0;
      const double expect = rec.mid.at(j, k) + rec.dt * sp - rec.dt * sn;
      if (std::abs(expect - rec.next.at(j, k)) > 1e-13) {
        fail(Errc::StateMismatch, "states are not consecutive levels of one step (lane " +
                                      std::to_string(j + 1) + " cell " + std::to_string(k) + ")");
      }
    }
  }
  return exchange;
}

void entropy_residual_local(std::span<double> out, const StepRecord& rec,
                            const std::vector<std::vector<double>>& exchange, double c,
                            const VelocityModel& vel) {
  require_same_shape(rec);
  const int m = rec.prev.lanes;
  const int n = rec.prev.cells;
  const double lam = rec.dt / rec.dx;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < n; ++k) {
      const double um = k > 0 ? rec.prev.at(j, k - 1)
                              : (rec.periodic ? rec.prev.at(j, n - 1) : 0.0);
      const double u = rec.prev.at(j, k);
      const double up = k + 1 < n ? rec.prev.at(j, k + 1)
                                  : (rec.periodic ? rec.prev.at(j, 0) : 0.0);
      const double fp = kruzkov_flux_local(u, up, c, j, vel);
      const double fm = kruzkov_flux_local(um, u, c, j, vel);
      const double sg = sgn0(rec.next.at(j, k) - c);
      const double sp = j > 0 ? exchange[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] : 0.0;
      const double sn = j + 1 < m ? exchange[static_cast<size_t>(j)][static_cast<size_t>(k)] : 0.0;
      out[static_cast<size_t>(j) * n + k] = std::abs(rec.next.at(j, k) - c) - std::abs(u - c) +
                                            lam * (fp - fm) - rec.dt * sg * (sp - sn);
    }
  }
}

void entropy_margins(const StepRecord& rec, const DiscreteKernel& flux_kernel,
                     const DiscreteKernel* source_kernel, int& k_lo, int& k_hi) {
  const int n = rec.prev.cells;
  if (rec.periodic) {  // wrap-around stencils never touch padding
    k_lo = 0;
    k_hi = n - 1;
    return;
  }
  // R at cell k-1 reads from k + h_lo, R at cell k reads up to k + h_hi + 1
  k_lo = std::max(1, -flux_kernel.h_lo);
  k_hi = n - 2 - flux_kernel.h_hi;
  if (source_kernel != nullptr) {
    k_lo = std::max(k_lo, -source_kernel->h_lo - 1);
    k_hi = std::min(k_hi, n - 2 - source_kernel->h_hi);
  }
}

void entropy_residual_nonlocal(std::span<double> out, const StepRecord& rec,
                               const std::vector<std::vector<double>>& exchange, double c,
                               const VelocityModel& vel, int margin_lo, int margin_hi) {
  require_same_shape(rec);
  if (rec.flux_conv == nullptr) {
    fail(Errc::StateMismatch, "step record carries no flux convolution field");
  }
  const int m = rec.prev.lanes;
  const int n = rec.prev.cells;
  const double lam = rec.dt / rec.dx;
  constexpr double skip = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    const std::vector<double>& conv = (*rec.flux_conv)[static_cast<size_t>(j)];
    for (int k = 0; k < n; ++k) {
      if (k < margin_lo || k > margin_hi) {
        out[static_cast<size_t>(j) * n + k] = skip;
        continue;
      }
      const int km = k > 0 ? k - 1 : n - 1;  // margins keep k >= 1 unless periodic
      const double um = rec.prev.at(j, km);
      const double u = rec.prev.at(j, k);
      const double vk = vel.velocity(j, conv[static_cast<size_t>(k)]);
      const double vkm = vel.velocity(j, conv[static_cast<size_t>(km)]);
      const double fp = vk * std::abs(u - c);
      const double fm = vkm * std::abs(um - c);
      const double sg = sgn0(rec.next.at(j, k) - c);
      const double sp = j > 0 ? exchange[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] : 0.0;
      const double sn = j + 1 < m ? exchange[static_cast<size_t>(j)][static_cast<size_t>(k)] : 0.0;
      out[static_cast<size_t>(j) * n + k] = std::abs(rec.next.at(j, k) - c) - std::abs(u - c) +
                                            lam * (fp - fm) + lam * sg * c * (vk - vkm) -
                                            rec.dt * sg * (sp - sn);
    }
  }
}

EntropyChecker::EntropyChecker(const Grid1D& grid, const VelocityModel& vel, FluxMode flux,
                               SourceMode source, std::vector<double> extra_c, double tol)
    : vel_(vel), flux_(flux), source_(source) {
  if (flux_.nonlocal()) {
    flux_kernel_ = discretize_kernel(flux_.kernel, grid.dx);
  }
  if (source_.nonlocal()) {
    source_kernel_ = discretize_kernel(source_.kernel, grid.dx);
  }
  std::set<double> levels;
  for (int i = 0; i <= 20; ++i) levels.insert(static_cast<double>(i) / 20.0);
  for (const double c : extra_c) {
    if (c >= 0.0 && c <= 1.0) levels.insert(c);
  }
  c_levels_.assign(levels.begin(), levels.end());
  report_.tol = tol;
}

void EntropyChecker::on_step(const StepRecord& rec) {
  const int m = rec.prev.lanes;
  const int n = rec.prev.cells;
  const size_t field = static_cast<size_t>(m) * static_cast<size_t>(n);
  if (residual_.size() != c_levels_.size() || (!residual_.empty() && residual_[0].size() != field)) {
    residual_.assign(c_levels_.size(), std::vector<double>(field));
  }
  const std::vector<std::vector<double>> exchange = step_exchange_rates(rec, vel_);
  int k_lo = 0, k_hi = n - 1;
  if (flux_.nonlocal()) {
    entropy_margins(rec, flux_kernel_, source_.nonlocal() ? &source_kernel_ : nullptr, k_lo, k_hi);
  }
  parallel_for_coarse(static_cast<int>(c_levels_.size()), [&](int ci) {
    if (flux_.nonlocal()) {
      entropy_residual_nonlocal(residual_[static_cast<size_t>(ci)], rec, exchange,
                                c_levels_[static_cast<size_t>(ci)], vel_, k_lo, k_hi);
    } else {
      entropy_residual_local(residual_[static_cast<size_t>(ci)], rec, exchange,
                             c_levels_[static_cast<size_t>(ci)], vel_);
    }
  });
  for (size_t ci = 0; ci < c_levels_.size(); ++ci) {
    const std::vector<double>& res = residual_[ci];
    for (size_t i = 0; i < res.size(); ++i) {
      const double r = res[i];
      if (std::isinf(r)) continue;  // excluded near-boundary cell
      if (r > report_.max_residual) {
        report_.max_residual = r;
        report_.arg_lane = static_cast<int>(i) / n;
        report_.arg_cell = static_cast<int>(i) % n;
        report_.arg_step = step_index_;
        report_.arg_c = c_levels_[ci];
      }
      if (r > report_.tol) ++report_.n_violations;
    }
  }
  ++step_index_;
}

}  // namespace lanesim
