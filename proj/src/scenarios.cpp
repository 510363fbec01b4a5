#include "lanesim/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lanesim/diagnostics.hpp"
#include "lanesim/errors.hpp"

namespace lanesim {

namespace {

std::string range_tag(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", r);
  std::string s = buf;
  for (char& ch : s) {
    if (ch == '.') ch = 'p';
  }
  return s;
}

/// Two lanes, Greenshields speeds 1.5 and 2.5, local flux, one period of the
/// sin^2 profile on the periodic domain [0,2] (the initial datum is
/// 2-periodic, and the reference error table is only reproduced under
/// wrap-around dynamics).
RunConfig two_lane_base() {
  RunConfig c;
  c.grid = build_grid(0.0, 2.0, 0.01, BoundaryMode::Periodic);
  c.t_end = 1.5;
  c.lanes = {LaneVelocity{VelocityLaw::LinearGreenshields, 1.5},
             LaneVelocity{VelocityLaw::LinearGreenshields, 2.5}};
  ProfileSpec hump;
  hump.kind = ProfileSpec::Kind::SinSq;
  c.initial = {hump, hump};
  c.flux.kind = FluxMode::Kind::LocalGodunov;
  c.source.kind = SourceMode::Kind::Local;
  c.cfl.mode = CflController::Mode::Adaptive;
  c.snapshot_times = {0.75, 1.5};
  return c;
}

/// Two lanes, quadratic speed, bump data q(2x - 1/2) and q(x), forward-linear
/// source kernel of range 0.5; flux mode set by the caller.
RunConfig bump_base() {
  RunConfig c;
  c.grid = build_grid(-1.5, 3.5, 0.01);
  c.t_end = 1.0;
  c.lanes = {LaneVelocity{VelocityLaw::QuadraticConcave, 0.0},
             LaneVelocity{VelocityLaw::QuadraticConcave, 0.0}};
  ProfileSpec lane1;
  lane1.kind = ProfileSpec::Kind::BumpQ;
  lane1.scale = 2.0;
  lane1.shift = -0.5;
  ProfileSpec lane2;
  lane2.kind = ProfileSpec::Kind::BumpQ;
  c.initial = {lane1, lane2};
  c.source.kind = SourceMode::Kind::NonlocalForward;
  c.source.kernel = {KernelFamily::LinearDecreasingForward, 0.5};
  c.cfl.mode = CflController::Mode::Adaptive;
  c.snapshot_times = {0.5, 1.0};
  return c;
}

RunConfig with_source(RunConfig c, SourceMode::Kind kind, KernelFamily family, double range,
                      const std::string& name) {
  c.source.kind = kind;
  c.source.kernel = {family, range};
  c.name = name;
  return c;
}

constexpr std::array<double, 6> kSweepRanges = {0.64, 0.32, 0.16, 0.08, 0.04, 0.02};

}  // namespace

PresetName preset_from_name(const std::string& name) {
  if (name == "two_lane_local_flux") return PresetName::TwoLaneLocalFlux;
  if (name == "nu_sweep" || name == "table1") return PresetName::NuSweep;
  if (name == "nonlocal_flux_bump") return PresetName::NonlocalFluxBump;
  if (name == "source_kernel_cases") return PresetName::SourceKernelCases;
  fail(Errc::SchemaError, "unknown preset '" + name + "'");
}

const char* preset_name(PresetName p) {
  switch (p) {
    case PresetName::TwoLaneLocalFlux:
      return "two_lane_local_flux";
    case PresetName::NuSweep:
      return "nu_sweep";
    case PresetName::NonlocalFluxBump:
      return "nonlocal_flux_bump";
    case PresetName::SourceKernelCases:
      return "source_kernel_cases";
  }
  return "?";
}

std::vector<std::string> preset_names() {
  return {"two_lane_local_flux", "nu_sweep", "nonlocal_flux_bump", "source_kernel_cases"};
}

std::vector<RunConfig> expand_preset(PresetName preset) {
  std::vector<RunConfig> runs;
  switch (preset) {
    case PresetName::TwoLaneLocalFlux: {
      RunConfig base = two_lane_base();
      base.name = "two_lane_local_source";
      runs.push_back(base);
      runs.push_back(with_source(base, SourceMode::Kind::NonlocalForward,
                                 KernelFamily::ConstantForward, 0.5,
                                 "two_lane_forward_nu0p5"));
      runs.push_back(with_source(base, SourceMode::Kind::NonlocalSymmetric,
                                 KernelFamily::ConstantSymmetric, 0.25,
                                 "two_lane_symmetric_nu0p25"));
      break;
    }
    case PresetName::NuSweep: {
      RunConfig base = two_lane_base();
      base.snapshot_times = {1.5};
      base.name = "sweep_local";
      runs.push_back(base);
      for (const double nu : kSweepRanges) {
        runs.push_back(with_source(base, SourceMode::Kind::NonlocalForward,
                                   KernelFamily::ConstantForward, nu,
                                   "sweep_forward_nu" + range_tag(nu)));
      }
      for (const double nu : kSweepRanges) {
        runs.push_back(with_source(base, SourceMode::Kind::NonlocalSymmetric,
                                   KernelFamily::ConstantSymmetric, nu,
                                   "sweep_symmetric_nu" + range_tag(nu)));
      }
      break;
    }
    case PresetName::NonlocalFluxBump: {
      RunConfig local = bump_base();
      local.name = "bump_local_flux";
      runs.push_back(local);
      RunConfig nl = bump_base();
      nl.flux.kind = FluxMode::Kind::NonlocalDownstream;
      nl.flux.kernel = {KernelFamily::LinearDecreasingForward, 0.5};
      nl.name = "bump_nonlocal_flux";
      runs.push_back(nl);
      break;
    }
    case PresetName::SourceKernelCases: {
      RunConfig base = bump_base();
      base.flux.kind = FluxMode::Kind::NonlocalDownstream;
      base.flux.kernel = {KernelFamily::LinearDecreasingForward, 0.5};
      runs.push_back(with_source(base, SourceMode::Kind::NonlocalSymmetric,
                                 KernelFamily::SymmetricLinear, 0.25,
                                 "case_a_symmetric_nu0p25"));
      runs.push_back(with_source(base, SourceMode::Kind::NonlocalSymmetric,
                                 KernelFamily::SymmetricLinear, 0.5,
                                 "case_b_symmetric_nu0p5"));
      runs.push_back(with_source(base, SourceMode::Kind::NonlocalForward,
                                 KernelFamily::LinearDecreasingForward, 0.5,
                                 "case_c_forward_nu0p5"));
      break;
    }
  }
  for (const RunConfig& c : runs) validate_config(c);
  return runs;
}

const std::vector<std::array<std::array<double, 2>, 2>>& table1_reference() {
  // [nu index][kind][lane]; kind 0 forward-constant, 1 symmetric-constant
  static const std::vector<std::array<std::array<double, 2>, 2>> ref = {
      {{{0.0311, 0.0313}, {0.0330, 0.0310}}},
      {{{0.0239, 0.0167}, {0.0208, 0.0198}}},
      {{{0.0159, 0.0089}, {0.0131, 0.0120}}},
      {{{0.0095, 0.0049}, {0.0078, 0.0066}}},
      {{{0.0054, 0.0026}, {0.0045, 0.0035}}},
      {{{0.0030, 0.0013}, {0.0023, 0.0016}}},
  };
  return ref;
}

Table1Result reproduce_table1() {
  const std::vector<RunConfig> runs = expand_preset(PresetName::NuSweep);
  const Grid1D grid = runs.front().grid;

  const RunOutput local = run(runs.front());

  Table1Result result;
  result.nus.assign(kSweepRanges.begin(), kSweepRanges.end());
  result.cells.resize(kSweepRanges.size());
  const auto& ref = table1_reference();

  for (size_t i = 1; i < runs.size(); ++i) {
    const RunOutput out = run(runs[i]);
    const std::vector<double> err =
        l1_distance(out.final_state, local.final_state, grid, grid);
    const size_t nu_idx = (i - 1) % kSweepRanges.size();
    const size_t kind = (i - 1) / kSweepRanges.size();
    for (int lane = 0; lane < 2; ++lane) {
      Table1Cell& cell = result.cells[nu_idx][kind][static_cast<size_t>(lane)];
      cell.computed = err[static_cast<size_t>(lane)];
      cell.reference = ref[nu_idx][kind][static_cast<size_t>(lane)];
      cell.rel_dev = std::abs(cell.computed - cell.reference) / cell.reference;
    }
  }
  return result;
}

double Table1Result::max_rel_dev() const {
  double worst = 0.0;
  for (const auto& row : cells) {
    for (const auto& kind : row) {
      for (const Table1Cell& cell : kind) {
        worst = std::max(worst, cell.rel_dev);
      }
    }
  }
  return worst;
}

bool Table1Result::columns_strictly_decreasing() const {
  for (size_t kind = 0; kind < 2; ++kind) {
    for (size_t lane = 0; lane < 2; ++lane) {
      for (size_t i = 0; i + 1 < cells.size(); ++i) {
        if (!(cells[i + 1][kind][lane].computed < cells[i][kind][lane].computed)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string Table1Result::csv() const {
  std::ostringstream os;
  os << "nu,forward_lane1,forward_lane2,symmetric_lane1,symmetric_lane2\n";
  os.precision(17);
  for (size_t i = 0; i < nus.size(); ++i) {
    os << nus[i];
    for (size_t kind = 0; kind < 2; ++kind) {
      for (size_t lane = 0; lane < 2; ++lane) {
        os << "," << cells[i][kind][lane].computed;
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string Table1Result::comparison_csv() const {
  std::ostringstream os;
  os << "nu,kernel,lane,computed,reference,rel_dev,within_15pct\n";
  os.precision(17);
  for (size_t i = 0; i < nus.size(); ++i) {
    for (size_t kind = 0; kind < 2; ++kind) {
      for (size_t lane = 0; lane < 2; ++lane) {
        const Table1Cell& cell = cells[i][kind][lane];
        os << nus[i] << "," << (kind == 0 ? "forward" : "symmetric") << "," << lane + 1 << ","
           << cell.computed << "," << cell.reference << "," << cell.rel_dev << ","
           << (cell.rel_dev <= 0.15 ? "yes" : "no") << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace lanesim
