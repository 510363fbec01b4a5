#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lanesim/solver.hpp"

namespace lanesim {

/// Snapshot CSV: header `x,rho_1,...,rho_M`, one row per cell center,
/// 17 significant digits (round-trip exact).
void emit_snapshot_csv(const Snapshot& snap, const Grid1D& grid, const std::string& path);

/// Time-series CSV: header `t,mass_1,...,mass_M,tv_1,...,tv_M`.
void emit_timeseries_csv(const std::vector<TimeSeriesRow>& series, int lanes,
                         const std::string& path);

/// Writes a complete run directory: one snapshot CSV per requested time, the
/// time series, the resolved config echo and run.json with a content hash of
/// every emitted file. Byte-identical across reruns.
void write_run_outputs(const RunConfig& config, const RunOutput& out, const std::string& dir);

/// SHA-1 hex digest of a byte string, used as the output content hash.
std::string sha1_hex(std::string_view bytes);

std::string format_double(double v);  // %.17g

}  // namespace lanesim
