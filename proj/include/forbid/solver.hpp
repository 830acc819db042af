#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "forbid/geometry.hpp"
#include "forbid/sgd.hpp"
#include "forbid/stress.hpp"

namespace forbid {

enum class Variant {
    /// Keeps the node movements of previous passes and rescales them.
    Forbid,
    /// Restarts every pass from the initial layout scaled to the probed ratio.
    ForbidPrime,
};

std::string_view to_string(Variant v);

struct SolverConfig {
    Variant variant = Variant::Forbid;
    /// Binary search stops once the scale interval is at most this wide.
    double scale_step = 0.1;
    StressParams stress;
    ScheduleParams schedule;
    std::uint64_t seed = 42;

    void validate() const;
};

struct SolverResult {
    Layout layout;
    double final_scale = 1.0;
    std::size_t passes = 0;
    /// Pass whose output was returned; empty when the solver fell back to
    /// plain uniform scaling.
    std::optional<std::size_t> accepted_pass;
    ConvergenceTrace trace;
};

/// Upper bound on the number of optimization passes for a given search range:
/// the unscaled pass, the bisection depth, and one extra probe allowed when the
/// last bisection step still leaves overlaps.
std::size_t max_pass_count(double max_scale, double scale_step);

/// Removes every overlap: an unscaled pass first, then a binary search over the
/// uniform upscaling ratio between 1 and the minimum overlap-free scale, with
/// one optimization pass per probe. The result never contains an overlap.
SolverResult solve(const Layout& original, const SolverConfig& config);

}  // namespace forbid
