#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forbid/geometry.hpp"
#include "forbid/rng.hpp"
#include "forbid/stress.hpp"

namespace forbid {

/// Annealing schedule for one optimization pass. The step size decays
/// exponentially from eta_max at the first iteration to eta_min at the last.
struct ScheduleParams {
    int max_iterations = 30;
    /// Zero means: derive both bounds from the pair weights at pass start
    /// (eta_max = 1 / w_min, eta_min = stop_epsilon / w_max).
    double eta_max = 0.0;
    double eta_min = 0.0;
    double stop_epsilon = 0.1;

    bool has_bounds() const { return eta_max > 0.0 && eta_min > 0.0; }
    double decay() const;
    void validate() const;
};

/// Copy of `base` with eta bounds taken from the weights of `targets`, unless
/// `base` already carries explicit bounds.
ScheduleParams instantiate_schedule(const ScheduleParams& base, const PairTargets& targets);

/// eta(t) = eta_max * exp(-decay * t). Requires explicit bounds and
/// 0 <= t < max_iterations.
double step_size(int t, const ScheduleParams& schedule);

/// Moves a pair along its axis so that |d' - delta| = (1 - mu) |d - delta| with
/// mu = min(weight * eta, 1); each endpoint takes half the correction and the
/// midpoint is kept. Coincident points get a random axis drawn from `rng`.
std::pair<Point, Point> relax_pair(Point xi, Point xj, double delta, double weight, double eta,
                                   SplitMix64& rng);

struct IterationRecord {
    std::size_t pass_index = 0;
    std::size_t iteration_index = 0;
    double stress = 0.0;
    std::size_t overlap_count = 0;
    double scale = 1.0;
    double total_movement = 0.0;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

using ConvergenceTrace = std::vector<IterationRecord>;

/// Where a pass sits inside a solver run; copied into every trace record.
struct PassInfo {
    std::size_t pass_index = 0;
    double scale = 1.0;
};

/// One optimization pass: per iteration, refresh targets against the current
/// positions, relax every pair once in a seeded random order, and stop early
/// when nothing moved. Appends one record per iteration to `trace` if given.
Layout run_pass(const Layout& start, const Layout& reference, const StressParams& params,
                const ScheduleParams& schedule, std::uint64_t seed, PassInfo info = {},
                ConvergenceTrace* trace = nullptr);

}  // namespace forbid
