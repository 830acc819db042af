#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "forbid/geometry.hpp"
#include "forbid/rng.hpp"

namespace forbid::testing {

/// Side sizes are log-uniform in [0.5, 3]; their mean area is about 1.946.
inline constexpr double kMeanNodeArea = 1.9459;

/// Random layout: uniform centers in a square sized so that node area covers
/// `coverage` of it, sizes log-uniform in [0.5, 3].
inline Layout random_layout(std::size_t n, SplitMix64& rng, double coverage = 0.15) {
    const double side = std::sqrt(static_cast<double>(n) * kMeanNodeArea / coverage);
    Layout layout;
    layout.nodes.reserve(n);
    const double lo = std::log(0.5), hi = std::log(3.0);
    for (std::size_t i = 0; i < n; ++i) {
        NodeBox b;
        b.id = "n" + std::to_string(i);
        b.center = {rng.uniform(0.0, side), rng.uniform(0.0, side)};
        b.width = std::exp(rng.uniform(lo, hi));
        b.height = std::exp(rng.uniform(lo, hi));
        layout.nodes.push_back(b);
    }
    return layout;
}

inline NodeBox box(const std::string& id, double x, double y, double w = 1.0, double h = 1.0) {
    return NodeBox{id, {x, y}, w, h};
}

inline Layout layout_of(std::vector<NodeBox> nodes) {
    Layout l;
    l.nodes = std::move(nodes);
    return l;
}

/// Applies `perm` (new index -> old index) to the nodes of a layout.
inline Layout permute(const Layout& layout, const std::vector<std::size_t>& perm) {
    Layout out;
    for (const std::size_t old : perm) out.nodes.push_back(layout.nodes[old]);
    return out;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.below(k)]);
    return p;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace forbid::testing
