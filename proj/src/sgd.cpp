#include "forbid/sgd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "forbid/errors.hpp"
#include "forbid/overlap_scan.hpp"

namespace forbid {

double ScheduleParams::decay() const {
    if (max_iterations <= 1) return 0.0;
    return std::log(eta_max / eta_min) / static_cast<double>(max_iterations - 1);
}

void ScheduleParams::validate() const {
    if (max_iterations < 1) throw InputError("max_iterations must be at least 1");
    if (!(stop_epsilon > 0.0)) throw InputError("stop_epsilon must be positive");
    if (eta_max != 0.0 || eta_min != 0.0) {
        if (!(eta_min > 0.0) || !(eta_max >= eta_min))
            throw InputError("schedule requires eta_max >= eta_min > 0");
    }
}

ScheduleParams instantiate_schedule(const ScheduleParams& base, const PairTargets& targets) {
    ScheduleParams out = base;
    if (base.has_bounds()) return out;
    if (targets.size() == 0) {
        out.eta_max = out.eta_min = 1.0;
        return out;
    }
    const auto [lo, hi] = std::minmax_element(targets.weight.begin(), targets.weight.end());
    out.eta_max = 1.0 / *lo;
    out.eta_min = base.stop_epsilon / *hi;
    return out;
}

double step_size(int t, const ScheduleParams& schedule) {
    if (t < 0 || t >= schedule.max_iterations) throw InputError("iteration index out of schedule range");
    if (!schedule.has_bounds()) throw InputError("schedule has no step size bounds");
    if (t == schedule.max_iterations - 1) return schedule.eta_min;
    return schedule.eta_max * std::exp(-schedule.decay() * t);
}

std::pair<Point, Point> relax_pair(Point xi, Point xj, double delta, double weight, double eta,
                                   SplitMix64& rng) {
    Point diff = xi - xj;
    double d = norm(diff);
    Point u;
    if (d > 0.0) {
        u = (1.0 / d) * diff;
    } else {
        const double a = rng.angle();
        u = {std::cos(a), std::sin(a)};
        d = 0.0;
    }
    const double mu = std::min(weight * eta, 1.0);
    const double r = 0.5 * mu * (d - delta);
    return {xi - r * u, xj + r * u};
}

namespace {

struct PairIndex {
    std::uint32_t i;
    std::uint32_t j;
};

std::vector<PairIndex> all_pairs(std::size_t n) {
    std::vector<PairIndex> pairs;
    pairs.reserve(pair_count(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

}  // namespace

Layout run_pass(const Layout& start, const Layout& reference, const StressParams& params,
                const ScheduleParams& schedule, std::uint64_t seed, PassInfo info,
                ConvergenceTrace* trace) {
    schedule.validate();
    params.validate();
    if (start.size() != reference.size()) throw InputError("node set mismatch: different node counts");
    for (std::size_t i = 0; i < start.size(); ++i)
        if (start.nodes[i].id != reference.nodes[i].id)
            throw InputError("node set mismatch at index " + std::to_string(i));

    Layout current = start;
    const std::size_t n = current.size();
    const std::vector<double> ref = pair_distances(reference);
    const std::vector<PairIndex> pairs = all_pairs(n);
    std::vector<std::uint32_t> order(pairs.size());
    std::vector<Point> pos = current.centers();

    PairTargets targets;
    refresh_targets(current, ref, params, targets);
    const ScheduleParams sched = instantiate_schedule(schedule, targets);

    for (int t = 0; t < sched.max_iterations; ++t) {
        if (t > 0) refresh_targets(current, ref, params, targets);
        const double eta = step_size(t, sched);

        SplitMix64 rng = SplitMix64::derive(seed, info.pass_index, static_cast<std::uint64_t>(t));
        std::iota(order.begin(), order.end(), 0u);
        for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);

        double movement = 0.0;
        for (const std::uint32_t p : order) {
            const auto [i, j] = pairs[p];
            const auto [ni, nj] = relax_pair(pos[i], pos[j], targets.delta[p], targets.weight[p], eta, rng);
            movement += distance(ni, pos[i]) + distance(nj, pos[j]);
            pos[i] = ni;
            pos[j] = nj;
        }
        for (std::size_t i = 0; i < n; ++i) current.nodes[i].center = pos[i];

        if (trace) {
            trace->push_back({info.pass_index, static_cast<std::size_t>(t), stress_value(current, targets),
                              find_overlaps(current).size(), info.scale, movement});
        }
        if (movement == 0.0) break;
    }
    return current;
}

}  // namespace forbid
