#pragma once

#include <string>

#include "forbid/metrics.hpp"
#include "forbid/sgd.hpp"

namespace forbid {

inline constexpr const char* kTraceCsvHeader = "pass,iteration,stress,overlaps,scale,total_movement";

/// One row per record under kTraceCsvHeader; reals printed with 17 significant digits.
std::string write_trace_csv(const ConvergenceTrace& trace);

/// JSON object with the keys oo_nni, sp_ch_a, gs_bb_iar, nm_dm_imse, el_rsdd.
std::string metrics_json(const MetricsReport& report);

/// Shortest-ish exact decimal form of a double ("%.17g").
std::string format_real(double v);

}  // namespace forbid
