#pragma once

#include "forbid/geometry.hpp"

namespace forbid {

/// Sweep-line test for the presence of at least one strict overlap.
bool has_overlap(const Layout& layout);

/// Every strictly overlapping pair, found by a sweep over x with an active set
/// ordered by the lower y edge. Result is sorted.
OverlapSet find_overlaps(const Layout& layout);

/// All-pairs reference enumeration. Quadratic; meant for checking the sweep.
OverlapSet brute_force_overlaps(const Layout& layout);

}  // namespace forbid
