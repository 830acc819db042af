#include <doctest.h>

#include <algorithm>

#include "forbid/overlap_scan.hpp"
#include "support.hpp"

using namespace forbid;
using namespace forbid::testing;

TEST_CASE("has_overlap basics") {
    CHECK_FALSE(has_overlap(layout_of({box("a", 0, 0), box("b", 2, 0)})));
    CHECK(has_overlap(layout_of({box("a", 0, 0), box("b", 0, 0)})));
    CHECK_FALSE(has_overlap(layout_of({box("a", 0, 0)})));
    // Tangent along x and along y.
    CHECK_FALSE(has_overlap(layout_of({box("a", 0, 0), box("b", 1, 0), box("c", 0, 1), box("d", 1, 1)})));
}

TEST_CASE("find_overlaps basics") {
    CHECK(find_overlaps(layout_of({box("a", 0, 0), box("b", 5, 5)})).empty());
    const OverlapSet tri = find_overlaps(layout_of({box("a", 0, 0), box("b", 0.3, 0.1), box("c", 0.1, 0.4)}));
    CHECK(tri == OverlapSet{{0, 1}, {0, 2}, {1, 2}});
    CHECK(brute_force_overlaps(layout_of({box("a", 0, 0), box("b", 0.5, 0)})) == OverlapSet{{0, 1}});
    CHECK(brute_force_overlaps(layout_of({box("a", 0, 0), box("b", 5, 0)})).empty());
}

TEST_CASE("sweep agrees with the brute-force oracle") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(300);
        const double coverage = rng.uniform(0.05, 2.0);
        const Layout l = random_layout(n, rng, coverage);
        const OverlapSet expected = brute_force_overlaps(l);
        CHECK(find_overlaps(l) == expected);
        CHECK(has_overlap(l) == !expected.empty());
    }
    const Layout big = random_layout(500, rng, 0.2);
    CHECK(has_overlap(big) == !brute_force_overlaps(big).empty());
}

TEST_CASE("sweep handles grids of exactly touching boxes") {
    // Integer grid of unit boxes: every neighbor touches, none overlaps. Scaled
    // by awkward factors the arithmetic is inexact, and the sweep must still
    // agree with the predicate.
    Layout grid;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) grid.nodes.push_back(box(std::to_string(i * 12 + j), i, j));
    CHECK(find_overlaps(grid).empty());
    for (const double f : {0.1, 0.3, 0.7, 0.999999999999, 1.0 / 3.0}) {
        Layout g = grid;
        for (auto& n : g.nodes) {
            n.center = f * n.center;
            n.width *= f;
            n.height *= f;
        }
        CHECK(find_overlaps(g) == brute_force_overlaps(g));
        CHECK(has_overlap(g) == !brute_force_overlaps(g).empty());
    }
}

TEST_CASE("find_overlaps is permutation invariant") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Layout l = random_layout(120, rng, 0.6);
        const auto perm = random_permutation(l.size(), rng);
        const Layout p = permute(l, perm);
        OverlapSet relabeled;
        for (const auto& [i, j] : find_overlaps(p)) {
            const auto a = static_cast<std::uint32_t>(perm[i]);
            const auto b = static_cast<std::uint32_t>(perm[j]);
            relabeled.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(relabeled.begin(), relabeled.end());
        CHECK(relabeled == find_overlaps(l));
    }
}
