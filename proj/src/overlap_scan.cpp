#include "forbid/overlap_scan.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace forbid {

namespace {

// Sweep intervals are widened by a few hundred ulps so that rounding in the
// endpoint arithmetic can never hide a pair the exact predicate reports. Every
// candidate is then confirmed with overlaps(), which keeps the result exact.
constexpr double kSlack = 1e-13;

struct Event {
    double x;
    bool open;
    std::uint32_t node;
};

struct Sweep {
    std::vector<Event> events;
    std::vector<double> y_low;
    std::vector<double> y_high;
    double max_height = 0.0;
};

Sweep prepare(const Layout& layout) {
    Sweep s;
    const std::size_t n = layout.size();
    s.events.reserve(2 * n);
    s.y_low.resize(n);
    s.y_high.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeBox& b = layout.nodes[i];
        const double ex = kSlack * (std::abs(b.center.x) + b.width) + std::numeric_limits<double>::denorm_min();
        const double ey = kSlack * (std::abs(b.center.y) + b.height) + std::numeric_limits<double>::denorm_min();
        const auto idx = static_cast<std::uint32_t>(i);
        s.events.push_back({b.center.x - 0.5 * b.width - ex, true, idx});
        s.events.push_back({b.center.x + 0.5 * b.width + ex, false, idx});
        s.y_low[i] = b.center.y - 0.5 * b.height - ey;
        s.y_high[i] = b.center.y + 0.5 * b.height + ey;
        s.max_height = std::max(s.max_height, s.y_high[i] - s.y_low[i]);
    }
    // Opens sort before closes at equal x.
    std::sort(s.events.begin(), s.events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.open != b.open) return a.open;
        return a.node < b.node;
    });
    return s;
}

// Calls visit(i, j) for every strictly overlapping pair; stops once visit returns false.
template <typename Visit>
void sweep(const Layout& layout, Visit&& visit) {
    const Sweep s = prepare(layout);
    std::set<std::pair<double, std::uint32_t>> active;
    for (const Event& ev : s.events) {
        const std::uint32_t i = ev.node;
        if (!ev.open) {
            active.erase({s.y_low[i], i});
            continue;
        }
        const double lo = s.y_low[i] - s.max_height;
        for (auto it = active.lower_bound({lo, 0}); it != active.end() && it->first <= s.y_high[i]; ++it) {
            const std::uint32_t j = it->second;
            if (overlaps(layout.nodes[i], layout.nodes[j])) {
                if (!visit(std::min(i, j), std::max(i, j))) return;
            }
        }
        active.insert({s.y_low[i], i});
    }
}

}  // namespace

bool has_overlap(const Layout& layout) {
    bool found = false;
    sweep(layout, [&](std::uint32_t, std::uint32_t) {
        found = true;
        return false;
    });
    return found;
}

OverlapSet find_overlaps(const Layout& layout) {
    OverlapSet out;
    sweep(layout, [&](std::uint32_t i, std::uint32_t j) {
        out.emplace_back(i, j);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

OverlapSet brute_force_overlaps(const Layout& layout) {
    OverlapSet out;
    const auto n = static_cast<std::uint32_t>(layout.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (overlaps(layout.nodes[i], layout.nodes[j])) out.emplace_back(i, j);
    return out;
}

}  // namespace forbid
