#pragma once

#include <string>

#include "forbid/geometry.hpp"

namespace forbid {

/// SVG 1.1 drawing of the node rectangles: nodes taking part in an overlap are
/// half-transparent red (class "overlap"), others opaque blue (class "free").
/// Edges are drawn as grey segments below the nodes. The viewBox covers the
/// node rectangles plus a 2% margin.
std::string render_svg(const Layout& layout, const OverlapSet& overlaps);

}  // namespace forbid
