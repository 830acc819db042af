#pragma once

#include <vector>

#include "forbid/geometry.hpp"

namespace forbid {

/// Convex hull by Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<Point> convex_hull(std::vector<Point> points);

/// Area of the convex hull; zero for fewer than three non-collinear points.
double convex_hull_area(const std::vector<Point>& points);

/// Shoelace area of a simple polygon given in order.
double polygon_area(const std::vector<Point>& polygon);

}  // namespace forbid
