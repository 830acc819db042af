#include <doctest.h>

#include "forbid/baselines.hpp"
#include "forbid/metrics.hpp"
#include "forbid/overlap_scan.hpp"
#include "forbid/solver.hpp"
#include "support.hpp"

using namespace forbid;
using namespace forbid::testing;

namespace {

void check_result(const Layout& original, const SolverResult& r) {
    CHECK(brute_force_overlaps(r.layout).empty());
    CHECK(r.final_scale >= 1.0);
    const double bound = min_overlap_free_scale(original);
    CHECK(r.final_scale <= bound);
    CHECK(r.passes <= max_pass_count(bound, 0.1));
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        const auto& a = r.trace[i - 1];
        const auto& b = r.trace[i];
        CHECK((a.pass_index < b.pass_index ||
               (a.pass_index == b.pass_index && a.iteration_index < b.iteration_index)));
    }
}

Layout crowded_instance(std::uint64_t seed, std::size_t n, std::size_t min_overlaps) {
    SplitMix64 rng(seed);
    for (;;) {
        Layout l = random_layout(n, rng, 1.2);
        if (find_overlaps(l).size() >= min_overlaps) return l;
    }
}

}  // namespace

TEST_CASE("max_pass_count") {
    CHECK(max_pass_count(1.0, 0.1) == 1);
    CHECK(max_pass_count(1.05, 0.1) == 2);
    CHECK(max_pass_count(2.0, 0.1) == 1 + 4 + 1);
    CHECK(max_pass_count(1.8, 0.1) == 1 + 3 + 1);
}

TEST_CASE("overlap-free input is returned unchanged") {
    const Layout l = layout_of({box("a", 0, 0), box("b", 3, 0), box("c", 0, 3)});
    for (const Variant v : {Variant::Forbid, Variant::ForbidPrime}) {
        SolverConfig config;
        config.variant = v;
        const SolverResult r = solve(l, config);
        CHECK(r.layout == l);
        CHECK(r.final_scale == 1.0);
        CHECK(r.passes == 1);
        CHECK(r.trace.size() == 1);
    }
}

TEST_CASE("two heavily overlapping squares") {
    const Layout l = layout_of({box("a", 0, 0), box("b", 0.05, 0.02)});
    for (const Variant v : {Variant::Forbid, Variant::ForbidPrime}) {
        SolverConfig config;
        config.variant = v;
        const SolverResult r = solve(l, config);
        check_result(l, r);
    }
}

TEST_CASE("coincident centers are jittered instead of failing") {
    const Layout l = layout_of({box("a", 0, 0), box("b", 0, 0), box("c", 5, 5), box("d", 5, 5.1)});
    const SolverResult r = solve(l, SolverConfig{});
    CHECK(brute_force_overlaps(r.layout).empty());
    const SolverResult b = scaling_baseline(l);
    CHECK(brute_force_overlaps(b.layout).empty());
}

TEST_CASE("random instances become overlap-free within the pass bound") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        SplitMix64 rng(seed);
        const Layout l = random_layout(10 + 15 * seed, rng, 0.6);
        for (const Variant v : {Variant::Forbid, Variant::ForbidPrime}) {
            SolverConfig config;
            config.variant = v;
            config.seed = seed;
            check_result(l, solve(l, config));
        }
    }
}

TEST_CASE("the accepted pass ends overlap-free in the trace") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        SplitMix64 rng = SplitMix64::derive(1010, i);
        const Layout l = random_layout(10, rng, 0.15);
        for (const Variant v : {Variant::Forbid, Variant::ForbidPrime}) {
            SolverConfig config;
            config.variant = v;
            config.seed = i;
            const SolverResult r = solve(l, config);
            check_result(l, r);
            REQUIRE(r.accepted_pass.has_value());
            const IterationRecord* last = nullptr;
            for (const auto& rec : r.trace)
                if (rec.pass_index == *r.accepted_pass) last = &rec;
            REQUIRE(last != nullptr);
            CHECK(last->overlap_count == 0);
        }
    }
}

TEST_CASE("solve is deterministic") {
    const Layout l = crowded_instance(4, 60, 30);
    SolverConfig config;
    config.seed = 77;
    const SolverResult a = solve(l, config);
    const SolverResult b = solve(l, config);
    CHECK(a.layout == b.layout);
    CHECK(a.trace == b.trace);
    CHECK(a.final_scale == b.final_scale);
    CHECK(a.passes == b.passes);
}

TEST_CASE("reference layouts keep the aspect ratio at every scale") {
    const Layout l = crowded_instance(9, 50, 10);
    const Point o = scaling_origin(l);
    const Box b0 = bounding_box(l, false);
    for (const double s : {1.0, 1.37, 2.5, 11.0}) {
        const Box b = bounding_box(scale_about(l, s, o), false);
        CHECK(b.width() / b.height() == doctest::Approx(b0.width() / b0.height()).epsilon(1e-9));
    }
}

TEST_CASE("the restarting variant moves nodes less in the median") {
    const Layout l = crowded_instance(2024, 100, 100);
    REQUIRE(find_overlaps(l).size() >= 100);
    std::vector<double> plain, prime;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SolverConfig config;
        config.seed = seed;
        const SolverResult a = solve(l, config);
        config.variant = Variant::ForbidPrime;
        const SolverResult b = solve(l, config);
        CHECK(brute_force_overlaps(a.layout).empty());
        CHECK(brute_force_overlaps(b.layout).empty());
        plain.push_back(nm_dm_imse(l, a.layout));
        prime.push_back(nm_dm_imse(l, b.layout));
    }
    CHECK(median(prime) <= median(plain));
}
