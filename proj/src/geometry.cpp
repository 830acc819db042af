#include "forbid/geometry.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "forbid/errors.hpp"
#include "forbid/overlap_scan.hpp"

namespace forbid {

void Layout::validate() const {
    if (nodes.empty()) throw InputError("layout has no nodes");
    std::unordered_set<std::string> seen;
    seen.reserve(nodes.size());
    for (const auto& n : nodes) {
        if (!std::isfinite(n.center.x) || !std::isfinite(n.center.y))
            throw InputError("node '" + n.id + "': non-finite position");
        if (!(n.width > 0.0) || !(n.height > 0.0) || !std::isfinite(n.width) ||
            !std::isfinite(n.height))
            throw InputError("node '" + n.id + "': width and height must be positive");
        if (!seen.insert(n.id).second) throw InputError("duplicate id '" + n.id + "'");
    }
    for (const auto& e : edges) {
        if (e.source >= nodes.size() || e.target >= nodes.size())
            throw InputError("edge references a node index out of range");
    }
}

std::vector<Point> Layout::centers() const {
    std::vector<Point> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.center);
    return out;
}

Box bounding_box(const Layout& layout, bool include_sizes) {
    if (layout.empty()) throw InputError("bounding box of an empty layout");
    constexpr double inf = std::numeric_limits<double>::infinity();
    Box box{inf, inf, -inf, -inf};
    for (const auto& n : layout.nodes) {
        const double hw = include_sizes ? 0.5 * n.width : 0.0;
        const double hh = include_sizes ? 0.5 * n.height : 0.0;
        box.min_x = std::min(box.min_x, n.center.x - hw);
        box.max_x = std::max(box.max_x, n.center.x + hw);
        box.min_y = std::min(box.min_y, n.center.y - hh);
        box.max_y = std::max(box.max_y, n.center.y + hh);
    }
    return box;
}

Box bounding_box(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("bounding box of an empty point set");
    Box box{points[0].x, points[0].y, points[0].x, points[0].y};
    for (const auto& p : points) {
        box.min_x = std::min(box.min_x, p.x);
        box.max_x = std::max(box.max_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

Layout scale_about(const Layout& layout, double factor, Point origin) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw InputError("scale factor must be positive and finite");
    Layout out = layout;
    if (factor == 1.0) return out;
    for (auto& n : out.nodes) n.center = origin + factor * (n.center - origin);
    return out;
}

double min_overlap_free_scale(const Layout& layout) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    double s_max = 1.0;
    for (const auto& [i, j] : find_overlaps(layout)) {
        const NodeBox& a = layout.nodes[i];
        const NodeBox& b = layout.nodes[j];
        const double dx = std::abs(a.center.x - b.center.x);
        const double dy = std::abs(a.center.y - b.center.y);
        if (dx == 0.0 && dy == 0.0) throw CoincidentCentersError(i, j);
        const double sx = dx > 0.0 ? 0.5 * (a.width + b.width) / dx : inf;
        const double sy = dy > 0.0 ? 0.5 * (a.height + b.height) / dy : inf;
        s_max = std::max(s_max, std::min(sx, sy));
    }
    if (s_max == 1.0) return s_max;
    // Touching pairs can round into overlap at the exact ratio; step up by ulps until clean.
    const Point origin = scaling_origin(layout);
    for (int i = 0; i < 64 && has_overlap(scale_about(layout, s_max, origin)); ++i) {
        s_max *= 1.0 + std::numeric_limits<double>::epsilon() * (1 << std::min(i, 20));
    }
    return s_max;
}

}  // namespace forbid
