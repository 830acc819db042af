#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace forbid {

/// SplitMix64 generator. Small, fast, and identical on every platform, which
/// keeps shuffles and jitter reproducible across standard libraries.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Generator seeded from a base seed and two stream coordinates.
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        SplitMix64 g(seed);
        std::uint64_t s = g();
        s ^= SplitMix64(a + 0x632be59bd9b4e019ULL)();
        s = SplitMix64(s)();
        s ^= SplitMix64(b + 0x8cb92ba72f3d8dd7ULL)();
        return SplitMix64(s);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound), rejection sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t r;
        do {
            r = (*this)();
        } while (r >= limit);
        return r % bound;
    }

    /// Uniform angle in [0, 2pi).
    double angle() { return 2.0 * std::numbers::pi * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace forbid
