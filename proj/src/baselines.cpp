#include "forbid/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "forbid/errors.hpp"
#include "forbid/overlap_scan.hpp"
#include "forbid/rng.hpp"

namespace forbid {

namespace {
constexpr int kJitterAttempts = 3;
constexpr double kJitterFraction = 1e-4;
}  // namespace

ScaleBound resolve_scale_bound(const Layout& layout, std::uint64_t seed) {
    ScaleBound out{layout, 1.0, false};
    SplitMix64 rng = SplitMix64::derive(seed, std::numeric_limits<std::uint64_t>::max());
    for (int attempt = 0; attempt <= kJitterAttempts; ++attempt) {
        try {
            out.scale = min_overlap_free_scale(out.layout);
            return out;
        } catch (const CoincidentCentersError&) {
            if (attempt == kJitterAttempts) break;
        }
        std::set<std::size_t> coincident;
        for (const auto& [i, j] : find_overlaps(out.layout)) {
            if (out.layout.nodes[i].center == out.layout.nodes[j].center) {
                coincident.insert(i);
                coincident.insert(j);
            }
        }
        for (const std::size_t i : coincident) {
            NodeBox& b = out.layout.nodes[i];
            const double r = kJitterFraction * std::min(b.width, b.height);
            b.center.x += rng.uniform(-r, r);
            b.center.y += rng.uniform(-r, r);
        }
        out.jittered = true;
    }
    throw SolverError("coincident centers persist after jitter");
}

Layout scale_until_overlap_free(const Layout& layout, double factor, Point origin, double* used) {
    Layout scaled = scale_about(layout, factor, origin);
    for (int i = 0; i < 64 && has_overlap(scaled); ++i) {
        factor *= 1.0 + 4.0 * std::numeric_limits<double>::epsilon() * (1 << std::min(i, 20));
        scaled = scale_about(layout, factor, origin);
    }
    if (has_overlap(scaled)) throw SolverError("uniform scaling failed to separate nodes");
    if (used) *used = factor;
    return scaled;
}

SolverResult scaling_baseline(const Layout& original, std::uint64_t seed) {
    original.validate();
    const ScaleBound bound = resolve_scale_bound(original, seed);
    SolverResult result;
    result.layout = scale_until_overlap_free(bound.layout, bound.scale, scaling_origin(bound.layout),
                                             &result.final_scale);
    result.passes = 0;
    return result;
}

}  // namespace forbid
