#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forbid/geometry.hpp"

namespace forbid {

struct StressParams {
    /// Distance exponent of the weights; must be negative.
    double alpha = -2.0;
    /// Extra factor on the exponent for overlapping pairs.
    double k = 1.0;

    void validate() const;
};

/// Smallest reference distance used for non-overlapping pairs.
inline constexpr double kMinReferenceDistance = 1e-9;

/// Target center distance for a pair. Overlapping pairs aim for the distance at
/// which their rectangles would touch corner to corner; others keep their
/// reference distance.
double ideal_distance(const NodeBox& a, const NodeBox& b, bool overlapping, double reference_distance);

double pair_weight(double delta, bool overlapping, const StressParams& params);

/// Number of unordered pairs among n nodes.
constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Per-pair ideal distances and weights. Pairs are stored in row-major order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct PairTargets {
    std::size_t node_count = 0;
    std::vector<double> delta;
    std::vector<double> weight;
    std::vector<std::uint8_t> is_overlap;

    std::size_t size() const { return delta.size(); }
};

/// Condensed all-pairs center distances of `layout`, in PairTargets order.
std::vector<double> pair_distances(const Layout& layout);

/// Classifies every pair on `current` and sets targets against the distances
/// of `reference`. Throws InputError when the node sets differ.
PairTargets refresh_targets(const Layout& current, const Layout& reference, const StressParams& params);

/// Same as above with reference distances precomputed by pair_distances().
void refresh_targets(const Layout& current, std::span<const double> reference_distances,
                     const StressParams& params, PairTargets& out);

/// Weighted sum over all pairs of (distance - delta)^2.
double stress_value(const Layout& current, const PairTargets& targets);

}  // namespace forbid
