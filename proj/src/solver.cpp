#include "forbid/solver.hpp"

#include <cmath>
#include <optional>

#include "forbid/baselines.hpp"
#include "forbid/errors.hpp"
#include "forbid/overlap_scan.hpp"

namespace forbid {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Forbid: return "forbid";
        case Variant::ForbidPrime: return "forbid-prime";
    }
    return "unknown";
}

void SolverConfig::validate() const {
    if (!(scale_step > 0.0) || !std::isfinite(scale_step)) throw InputError("scale_step must be positive");
    stress.validate();
    schedule.validate();
}

std::size_t max_pass_count(double max_scale, double scale_step) {
    if (!(max_scale > 1.0)) return 1;
    const double depth = std::ceil(std::log2((max_scale - 1.0) / scale_step));
    return 2 + static_cast<std::size_t>(std::max(0.0, depth));
}

SolverResult solve(const Layout& input, const SolverConfig& config) {
    input.validate();
    config.validate();

    SolverResult result;
    result.layout = run_pass(input, input, config.stress, config.schedule, config.seed, {0, 1.0}, &result.trace);
    result.passes = 1;
    result.accepted_pass = 0;
    if (!has_overlap(result.layout)) return result;
    result.accepted_pass.reset();

    const ScaleBound bound = resolve_scale_bound(input, config.seed);
    const Layout& original = bound.layout;
    const Point origin = scaling_origin(original);
    if (bound.jittered) result.layout = original;

    double low = 1.0;
    double up = bound.scale;
    double cur = 0.5 * (low + up);
    double applied = 1.0;
    const std::size_t pass_limit = max_pass_count(bound.scale, config.scale_step);
    struct Feasible {
        Layout layout;
        double scale;
        std::size_t pass;
    };
    std::optional<Feasible> feasible;

    bool overlap = true;
    while ((overlap || up - low > config.scale_step) && result.passes < pass_limit) {
        // Last pass in the budget with nothing feasible yet: probe the upper bound from the
        // scaled original, which is overlap-free and already at zero stress.
        const bool last_chance = !feasible && result.passes + 1 == pass_limit;
        if (last_chance) cur = up;
        Layout reference = scale_about(original, cur, origin);
        if (config.variant == Variant::Forbid && !last_chance) {
            result.layout = scale_about(result.layout, cur / applied, origin);
        } else {
            result.layout = reference;
        }
        applied = cur;
        result.layout = run_pass(result.layout, reference, config.stress, config.schedule, config.seed,
                                 {result.passes, cur}, &result.trace);
        ++result.passes;

        overlap = has_overlap(result.layout);
        if (overlap) {
            low = cur;
        } else {
            up = cur;
            feasible = Feasible{result.layout, cur, result.passes - 1};
        }
        cur = 0.5 * (low + up);
    }

    if (!overlap) {
        result.final_scale = applied;
        result.accepted_pass = result.passes - 1;
    } else if (feasible) {
        result.layout = std::move(feasible->layout);
        result.final_scale = feasible->scale;
        result.accepted_pass = feasible->pass;
    } else {
        result.layout = scale_until_overlap_free(original, bound.scale, origin, &result.final_scale);
    }
    return result;
}

}  // namespace forbid
