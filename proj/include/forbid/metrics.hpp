#pragma once

#include <string>
#include <vector>

#include "forbid/geometry.hpp"

namespace forbid {

/// The five layout-preservation metrics. Every metric is computed on node
/// centers only; node sizes never enter a hull, bounding box or triangulation.
struct MetricsReport {
    double oo_nni = 0.0;
    double sp_ch_a = 1.0;
    double gs_bb_iar = 1.0;
    double nm_dm_imse = 0.0;
    double el_rsdd = 0.0;
    std::vector<std::string> warnings;
};

/// Fraction of pair/axis slots whose strict order flipped between the two
/// layouts; ties on either side never count.
double oo_nni(const Layout& initial, const Layout& final_layout);

/// Convex hull area ratio final / initial.
double sp_ch_a(const Layout& initial, const Layout& final_layout);

/// max(r, 1/r) with r the ratio of bounding box aspect ratios.
double gs_bb_iar(const Layout& initial, const Layout& final_layout);

/// Mean squared distance between final centers and the initial centers after
/// mapping the initial bounding box onto the final one (per-axis scaling).
double nm_dm_imse(const Layout& initial, const Layout& final_layout);

/// Relative standard deviation of the length ratios of the edges of the
/// Delaunay triangulation of the initial centers.
double el_rsdd(const Layout& initial, const Layout& final_layout);

/// All five metrics. el_rsdd is reported as 0 with a warning below three nodes.
MetricsReport compute_metrics(const Layout& initial, const Layout& final_layout);

}  // namespace forbid
