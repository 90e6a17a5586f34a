#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include <cstdint>
#include <utility>
#include <vector>

#include "atomless/good_set.hpp"
#include "atomless/rng.hpp"
#include "atomless/subalgebra.hpp"

namespace atomless::testing {

inline Endpoint random_point(Rng& rng, unsigned max_den) {
    const auto q = static_cast<std::int64_t>(rng.uniform(1, max_den));
    return Endpoint(static_cast<std::int64_t>(rng.uniform(0, static_cast<std::uint64_t>(q))), q);
}

/// Up to `max_intervals` raw (possibly overlapping, unsorted) intervals.
inline std::vector<Interval> random_raw(Rng& rng, unsigned max_intervals, unsigned max_den) {
    std::vector<Interval> raw;
    const auto count = rng.uniform(0, max_intervals);
    while (raw.size() < count) {
        Endpoint x = random_point(rng, max_den);
        Endpoint y = random_point(rng, max_den);
        if (x == y) {
            continue;
        }
        if (y < x) {
            std::swap(x, y);
        }
        raw.push_back({std::move(x), std::move(y)});
    }
    return raw;
}

/// Walks `depth` splits down from `start`, keeping a random side each time.
inline GoodSet descend(SubalgebraOracle& oracle, GoodSet start, Rng& rng, unsigned depth) {
    for (unsigned d = 0; d < depth; ++d) {
        auto [part, rest] = oracle.split(start);
        start = rng.coin() ? std::move(part) : std::move(rest);
    }
    return start;
}

/// Nonempty member of the oracle's subalgebra: a split descendant of the
/// universe, sometimes joined with a second one.
inline GoodSet random_member(SubalgebraOracle& oracle, Rng& rng) {
    GoodSet a = descend(oracle, GoodSet::universe(), rng, static_cast<unsigned>(rng.uniform(0, 4)));
    if (rng.coin()) {
        a = set_union(a, descend(oracle, GoodSet::universe(), rng, static_cast<unsigned>(rng.uniform(1, 4))));
    }
    return a;
}

/// Nonempty disjoint members of the oracle's subalgebra.
inline std::pair<GoodSet, GoodSet> random_disjoint_pair(SubalgebraOracle& oracle, Rng& rng) {
    const GoodSet top = descend(oracle, GoodSet::universe(), rng, static_cast<unsigned>(rng.uniform(0, 2)));
    auto [left, right] = oracle.split(top);
    return {descend(oracle, left, rng, static_cast<unsigned>(rng.uniform(0, 3))),
            descend(oracle, right, rng, static_cast<unsigned>(rng.uniform(0, 3)))};
}

inline GoodSet gs(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return GoodSet::interval(Endpoint(p, q), Endpoint(r, s));
}

}  // namespace atomless::testing
