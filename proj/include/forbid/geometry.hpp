#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace forbid {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// An axis-aligned rectangular node centered on `center`.
struct NodeBox {
    std::string id;
    Point center;
    double width = 1.0;
    double height = 1.0;

    friend bool operator==(const NodeBox&, const NodeBox&) = default;
};

/// Graph edge as a pair of node indices. Only used for rendering and bookkeeping.
struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;

    friend bool operator==(Edge, Edge) = default;
};

/// Node rectangles of a graph drawing, plus optional edges.
struct Layout {
    std::vector<NodeBox> nodes;
    std::vector<Edge> edges;

    std::size_t size() const { return nodes.size(); }
    bool empty() const { return nodes.empty(); }

    /// Throws InputError unless sizes are positive and finite, ids unique and
    /// edges in range. An empty layout is rejected.
    void validate() const;

    std::vector<Point> centers() const;

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// Axis-aligned box; may be degenerate (zero width or height).
struct Box {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    Point center() const { return {0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}; }
};

/// Unordered node index pair with first < second.
using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Overlapping pairs, sorted lexicographically and free of duplicates.
using OverlapSet = std::vector<IndexPair>;

/// Strict rectangle intersection: boxes that only touch along a side or a corner
/// do not overlap.
inline bool overlaps(const NodeBox& a, const NodeBox& b) {
    return std::abs(a.center.x - b.center.x) < 0.5 * (a.width + b.width) &&
           std::abs(a.center.y - b.center.y) < 0.5 * (a.height + b.height);
}

/// Bounding box of node centers, or of node rectangles when `include_sizes`.
Box bounding_box(const Layout& layout, bool include_sizes);
Box bounding_box(const std::vector<Point>& points);

/// Maps every center c to origin + factor * (c - origin). Sizes, ids, order and
/// edges are untouched. A factor of exactly 1 returns an identical copy.
Layout scale_about(const Layout& layout, double factor, Point origin);

/// Smallest s >= 1 such that scaling the centers by s removes every overlap.
/// Rounded up by a few ulps when scaling about scaling_origin at the exact ratio
/// would leave a touching pair overlapping in floating point.
/// Throws CoincidentCentersError when an overlapping pair shares its center.
double min_overlap_free_scale(const Layout& layout);

/// Center of the size-exclusive bounding box; the fixed origin for all rescaling.
inline Point scaling_origin(const Layout& layout) {
    return bounding_box(layout, false).center();
}

}  // namespace forbid
