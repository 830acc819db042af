#include "forbid/trace_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace forbid {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string write_trace_csv(const ConvergenceTrace& trace) {
    std::string out = kTraceCsvHeader;
    out += '\n';
    for (const auto& r : trace) {
        out += std::to_string(r.pass_index) + ',' + std::to_string(r.iteration_index) + ',' +
               format_real(r.stress) + ',' + std::to_string(r.overlap_count) + ',' + format_real(r.scale) +
               ',' + format_real(r.total_movement) + '\n';
    }
    return out;
}

std::string metrics_json(const MetricsReport& report) {
    nlohmann::ordered_json doc;
    doc["oo_nni"] = report.oo_nni;
    doc["sp_ch_a"] = report.sp_ch_a;
    doc["gs_bb_iar"] = report.gs_bb_iar;
    doc["nm_dm_imse"] = report.nm_dm_imse;
    doc["el_rsdd"] = report.el_rsdd;
    if (!report.warnings.empty()) doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

}  // namespace forbid
