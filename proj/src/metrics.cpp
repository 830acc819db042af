#include "forbid/metrics.hpp"

#include <cmath>

#include "forbid/delaunay.hpp"
#include "forbid/errors.hpp"
#include "forbid/hull.hpp"

namespace forbid {

namespace {

void require_matching(const Layout& a, const Layout& b) {
    if (a.size() != b.size()) throw InputError("metrics: layouts have different node counts");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.nodes[i].id != b.nodes[i].id)
            throw InputError("metrics: node mismatch at index " + std::to_string(i) + " ('" +
                             a.nodes[i].id + "' vs '" + b.nodes[i].id + "')");
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

Box center_box(const Layout& layout, const char* which) {
    const Box b = bounding_box(layout, false);
    if (!(b.width() > 0.0) || !(b.height() > 0.0))
        throw InputError(std::string("metrics: degenerate bounding box in ") + which + " layout");
    return b;
}

}  // namespace

double oo_nni(const Layout& initial, const Layout& final_layout) {
    require_matching(initial, final_layout);
    const std::size_t n = initial.size();
    if (n < 2) return 0.0;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a0 = initial.nodes[i].center, a1 = final_layout.nodes[i].center;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point b0 = initial.nodes[j].center, b1 = final_layout.nodes[j].center;
            if (sign(a0.x - b0.x) * sign(a1.x - b1.x) < 0) ++inversions;
            if (sign(a0.y - b0.y) * sign(a1.y - b1.y) < 0) ++inversions;
        }
    }
    return static_cast<double>(inversions) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double sp_ch_a(const Layout& initial, const Layout& final_layout) {
    require_matching(initial, final_layout);
    const double before = convex_hull_area(initial.centers());
    if (!(before > 0.0)) throw InputError("metrics: initial convex hull has zero area");
    return convex_hull_area(final_layout.centers()) / before;
}

double gs_bb_iar(const Layout& initial, const Layout& final_layout) {
    require_matching(initial, final_layout);
    const Box b0 = center_box(initial, "initial");
    const Box b1 = center_box(final_layout, "final");
    const double r = (b1.width() / b1.height()) / (b0.width() / b0.height());
    return std::max(r, 1.0 / r);
}

double nm_dm_imse(const Layout& initial, const Layout& final_layout) {
    require_matching(initial, final_layout);
    const Box b0 = center_box(initial, "initial");
    const Box b1 = bounding_box(final_layout, false);
    const Point c0 = b0.center(), c1 = b1.center();
    const double sx = b1.width() / b0.width();
    const double sy = b1.height() / b0.height();
    double sum = 0.0;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        const Point p = initial.nodes[i].center - c0;
        const Point q = final_layout.nodes[i].center - c1;
        const Point d{q.x - sx * p.x, q.y - sy * p.y};
        sum += d.x * d.x + d.y * d.y;
    }
    return sum / static_cast<double>(initial.size());
}

double el_rsdd(const Layout& initial, const Layout& final_layout) {
    require_matching(initial, final_layout);
    const Triangulation dt = delaunay(initial.centers());
    std::vector<double> ratios;
    ratios.reserve(dt.edges.size());
    for (const auto& [i, j] : dt.edges) {
        const double before = distance(initial.nodes[i].center, initial.nodes[j].center);
        if (!(before > 0.0)) throw InputError("metrics: zero-length Delaunay edge in initial layout");
        ratios.push_back(distance(final_layout.nodes[i].center, final_layout.nodes[j].center) / before);
    }
    double mean = 0.0;
    for (const double r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double var = 0.0;
    for (const double r : ratios) var += (r - mean) * (r - mean);
    var /= static_cast<double>(ratios.size());
    return std::sqrt(var) / mean;
}

MetricsReport compute_metrics(const Layout& initial, const Layout& final_layout) {
    MetricsReport report;
    report.oo_nni = oo_nni(initial, final_layout);
    report.sp_ch_a = sp_ch_a(initial, final_layout);
    report.gs_bb_iar = gs_bb_iar(initial, final_layout);
    report.nm_dm_imse = nm_dm_imse(initial, final_layout);
    if (initial.size() < 3) {
        report.el_rsdd = 0.0;
        report.warnings.push_back("el_rsdd: fewer than three nodes, reported as 0");
    } else {
        report.el_rsdd = el_rsdd(initial, final_layout);
    }
    return report;
}

}  // namespace forbid
