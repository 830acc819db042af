#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "forbid/geometry.hpp"

namespace forbid {

struct Triangulation {
    /// Counter-clockwise vertex index triples into the input point list.
    std::vector<std::array<std::size_t, 3>> triangles;
    /// Unique undirected edges with first < second, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Bowyer-Watson incremental Delaunay triangulation seeded with a bounding
/// triangle whose vertices sit at infinity. Points are inserted in
/// index order; points lying exactly on a circumcircle count as outside, which
/// settles cocircular ties by insertion order. Duplicate points are skipped.
/// Throws InputError for fewer than three points or an all-collinear set.
Triangulation delaunay(const std::vector<Point>& points);

/// Positive when d lies strictly inside the circumcircle of the
/// counter-clockwise triangle (a, b, c).
double in_circle(Point a, Point b, Point c, Point d);

}  // namespace forbid
