#include "forbid/stress.hpp"

#include <algorithm>
#include <cmath>

#include "forbid/errors.hpp"

namespace forbid {

namespace {

double power(double base, double exponent) {
    if (exponent == -2.0) return 1.0 / (base * base);
    return std::pow(base, exponent);
}

void require_same_nodes(const Layout& a, const Layout& b) {
    if (a.size() != b.size()) throw InputError("node set mismatch: different node counts");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.nodes[i].id != b.nodes[i].id)
            throw InputError("node set mismatch at index " + std::to_string(i) + ": '" +
                             a.nodes[i].id + "' vs '" + b.nodes[i].id + "'");
    }
}

}  // namespace

void StressParams::validate() const {
    if (!(alpha < 0.0)) throw InputError("alpha must be negative");
    if (!std::isfinite(k)) throw InputError("k must be finite");
}

double ideal_distance(const NodeBox& a, const NodeBox& b, bool overlapping, double reference_distance) {
    if (overlapping) return std::hypot(0.5 * (a.width + b.width), 0.5 * (a.height + b.height));
    return std::max(reference_distance, kMinReferenceDistance);
}

double pair_weight(double delta, bool overlapping, const StressParams& params) {
    return power(delta, overlapping ? params.k * params.alpha : params.alpha);
}

std::vector<double> pair_distances(const Layout& layout) {
    const std::size_t n = layout.size();
    std::vector<double> out;
    out.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(distance(layout.nodes[i].center, layout.nodes[j].center));
    return out;
}

void refresh_targets(const Layout& current, std::span<const double> reference_distances,
                     const StressParams& params, PairTargets& out) {
    const std::size_t n = current.size();
    const std::size_t m = pair_count(n);
    if (reference_distances.size() != m) throw InputError("node set mismatch: reference distances");
    out.node_count = n;
    out.delta.resize(m);
    out.weight.resize(m);
    out.is_overlap.resize(m);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const NodeBox& a = current.nodes[i];
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
            const NodeBox& b = current.nodes[j];
            const bool ov = overlaps(a, b);
            const double d = ideal_distance(a, b, ov, reference_distances[p]);
            out.is_overlap[p] = ov ? 1 : 0;
            out.delta[p] = d;
            out.weight[p] = pair_weight(d, ov, params);
        }
    }
}

PairTargets refresh_targets(const Layout& current, const Layout& reference, const StressParams& params) {
    require_same_nodes(current, reference);
    PairTargets out;
    const auto ref = pair_distances(reference);
    refresh_targets(current, ref, params, out);
    return out;
}

double stress_value(const Layout& current, const PairTargets& targets) {
    const std::size_t n = current.size();
    if (targets.node_count != n || targets.size() != pair_count(n))
        throw InputError("stress targets do not match the layout");
    double sum = 0.0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
            const double r = distance(current.nodes[i].center, current.nodes[j].center) - targets.delta[p];
            sum += targets.weight[p] * r * r;
        }
    }
    return sum;
}

}  // namespace forbid
