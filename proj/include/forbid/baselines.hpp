#pragma once

#include <cstdint>

#include "forbid/geometry.hpp"
#include "forbid/solver.hpp"

namespace forbid {

/// A layout together with its minimum overlap-free scale. `layout` differs from
/// the input only when coincident overlapping centers had to be jittered.
struct ScaleBound {
    Layout layout;
    double scale = 1.0;
    bool jittered = false;
};

/// Computes min_overlap_free_scale, jittering nodes that share a center with an
/// overlapping partner by at most 1e-4 * min(w, h) per axis. Gives up with a
/// SolverError after three attempts.
ScaleBound resolve_scale_bound(const Layout& layout, std::uint64_t seed);

/// Scales `layout` about `origin` by `factor`, growing the factor by a few ulps
/// at a time while rounding still leaves a touching pair overlapping. Returns
/// the factor actually used through `used`.
Layout scale_until_overlap_free(const Layout& layout, double factor, Point origin, double* used = nullptr);

/// Uniform scaling about the size-exclusive bounding box center by the minimum
/// overlap-free ratio.
SolverResult scaling_baseline(const Layout& original, std::uint64_t seed = 42);

}  // namespace forbid
