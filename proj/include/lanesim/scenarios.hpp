#pragma once

#include <array>
#include <string>
#include <vector>

#include "lanesim/solver.hpp"

namespace lanesim {

/// Shipped experiment presets.
///   TwoLaneLocalFlux   two-lane local-flux runs with local, forward-constant
///                      (range 0.5) and symmetric-constant (range 0.25)
///                      sources; snapshots at t = 0.75 and 1.5
///   NuSweep            the local run plus forward- and symmetric-constant
///                      sources over range in {0.64,...,0.02} (the table1 set)
///   NonlocalFluxBump   two-lane bump data contrasting local vs nonlocal flux,
///                      forward-linear kernels, range 0.5, snapshots 0.5 and 1
///   SourceKernelCases  nonlocal flux with three source kernel choices:
///                      symmetric-linear 0.25, symmetric-linear 0.5,
///                      forward-linear 0.5
enum class PresetName { TwoLaneLocalFlux, NuSweep, NonlocalFluxBump, SourceKernelCases };

PresetName preset_from_name(const std::string& name);
const char* preset_name(PresetName p);
std::vector<std::string> preset_names();

/// Expands a preset into its fully resolved run configurations. Pure:
/// the preset name alone determines the configs.
std::vector<RunConfig> expand_preset(PresetName preset);

/// One computed-vs-reference cell of the sweep table.
struct Table1Cell {
  double computed = 0.0;
  double reference = 0.0;
  double rel_dev = 0.0;
};

struct Table1Result {
  std::vector<double> nus;  // descending
  // [kernel kind][nu index][lane]; kind 0 = forward-constant, 1 = symmetric-constant
  std::vector<std::array<std::array<Table1Cell, 2>, 2>> cells;  // indexed [nu][kind][lane]

  double max_rel_dev() const;
  bool columns_strictly_decreasing() const;
  std::string csv() const;             // computed errors
  std::string comparison_csv() const;  // computed, reference, deviation, flag
};

/// Runs the 13 sweep runs (1 local + 6 forward + 6 symmetric) and tabulates
/// the per-lane L1 distances between each nonlocal-source solution and the
/// local-source solution at the final time. Cells deviating more than 15%
/// from the reference values are flagged in the comparison CSV.
Table1Result reproduce_table1();

/// Reference error table the reproduction is compared against.
const std::vector<std::array<std::array<double, 2>, 2>>& table1_reference();

}  // namespace lanesim
