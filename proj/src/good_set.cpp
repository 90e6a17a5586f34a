#include "atomless/good_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "atomless/rng.hpp"

namespace atomless {

GoodSet GoodSet::normalize(std::span<const Interval> raw) {
    std::vector<Interval> sorted(raw.begin(), raw.end());
    for (const auto& iv : sorted) {
        if (!(iv.lower < iv.upper)) {
            throw std::invalid_argument("empty or reversed interval [" + iv.lower.to_string() + "," +
                                        iv.upper.to_string() + ")");
        }
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& x, const Interval& y) { return x.lower < y.lower; });

    std::vector<Endpoint> bounds;
    for (const auto& iv : sorted) {
        // Overlapping or touching: extend the last interval.
        if (!bounds.empty() && iv.lower <= bounds.back()) {
            if (bounds.back() < iv.upper) {
                bounds.back() = iv.upper;
            }
            continue;
        }
        bounds.push_back(iv.lower);
        bounds.push_back(iv.upper);
    }
    return GoodSet(std::move(bounds));
}

GoodSet GoodSet::from_bounds(std::vector<Endpoint> bounds) {
    if (bounds.size() % 2 != 0) {
        throw std::invalid_argument("good set needs an even number of bounds");
    }
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        if (!(bounds[i - 1] < bounds[i])) {
            throw std::invalid_argument("good set bounds must be strictly increasing");
        }
    }
    return GoodSet(std::move(bounds));
}

GoodSet GoodSet::universe() { return GoodSet({Endpoint::zero(), Endpoint::one()}); }

GoodSet GoodSet::interval(Endpoint lower, Endpoint upper) {
    const Interval iv{std::move(lower), std::move(upper)};
    return normalize(std::span<const Interval>(&iv, 1));
}

std::vector<Interval> GoodSet::intervals() const {
    std::vector<Interval> out;
    out.reserve(interval_count());
    for (std::size_t i = 0; i < interval_count(); ++i) {
        out.push_back(interval_at(i));
    }
    return out;
}

const Endpoint& GoodSet::min_elem() const {
    if (bounds_.empty()) {
        throw std::domain_error("min_elem of the empty set");
    }
    return bounds_.front();
}

bool GoodSet::contains(const Endpoint& x) const {
    if (x.is_one()) {
        throw std::invalid_argument("1 is not a point of X");
    }
    // x is a member iff an odd number of bounds are <= x.
    const auto it = std::upper_bound(bounds_.begin(), bounds_.end(), x);
    return (it - bounds_.begin()) % 2 == 1;
}

std::string GoodSet::to_string() const {
    if (bounds_.empty()) {
        return "∅";
    }
    std::string out;
    for (std::size_t i = 0; i < interval_count(); ++i) {
        if (i != 0) {
            out += '+';
        }
        out += '[';
        out += bounds_[2 * i].to_string();
        out += ',';
        out += bounds_[2 * i + 1].to_string();
        out += ')';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GoodSet& a) { return os << a.to_string(); }

// Sweep over the merged bound sequences. Between consecutive sweep points the
// membership in each operand is constant, so a result bound is emitted exactly
// where op(in_a, in_b) changes value.
GoodSet combine(const GoodSet& a, const GoodSet& b, bool (*op)(bool, bool)) {
    const auto& xa = a.bounds_;
    const auto& xb = b.bounds_;
    std::vector<Endpoint> out;
    std::size_t i = 0, j = 0;
    bool in_a = false, in_b = false, in_out = false;
    while (i < xa.size() || j < xb.size()) {
        const Endpoint* x;
        if (j == xb.size() || (i < xa.size() && xa[i] <= xb[j])) {
            x = &xa[i];
        } else {
            x = &xb[j];
        }
        if (i < xa.size() && xa[i] == *x) {
            in_a = !in_a;
            ++i;
        }
        if (j < xb.size() && xb[j] == *x) {
            in_b = !in_b;
            ++j;
        }
        const bool now = op(in_a, in_b);
        if (now != in_out) {
            out.push_back(*x);
            in_out = now;
        }
    }
    return GoodSet(std::move(out));
}

GoodSet set_union(const GoodSet& a, const GoodSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
}

GoodSet intersect(const GoodSet& a, const GoodSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

GoodSet difference(const GoodSet& a, const GoodSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
}

GoodSet symmetric_difference(const GoodSet& a, const GoodSet& b) {
    return combine(a, b, [](bool x, bool y) { return x != y; });
}

GoodSet complement(const GoodSet& a) { return difference(GoodSet::universe(), a); }

bool is_subset(const GoodSet& a, const GoodSet& b) { return difference(a, b).is_empty(); }

bool is_disjoint(const GoodSet& a, const GoodSet& b) { return intersect(a, b).is_empty(); }

GoodSet random_good(std::uint64_t seed, unsigned max_intervals, unsigned max_denominator) {
    if (max_intervals < 1 || max_denominator < 2) {
        throw std::invalid_argument("random_good needs max_intervals >= 1 and max_denominator >= 2");
    }
    Rng rng(splitmix64(seed));
    auto point = [&] {
        const auto q = static_cast<std::int64_t>(rng.uniform(1, max_denominator));
        const auto p = static_cast<std::int64_t>(rng.uniform(0, static_cast<std::uint64_t>(q)));
        return Endpoint(p, q);
    };
    const auto count = rng.uniform(0, max_intervals);
    std::vector<Interval> raw;
    for (std::uint64_t k = 0; k < count; ++k) {
        Endpoint x = point();
        Endpoint y = point();
        if (x == y) {
            continue;
        }
        if (y < x) {
            std::swap(x, y);
        }
        raw.push_back({std::move(x), std::move(y)});
    }
    return GoodSet::normalize(raw);
}

}  // namespace atomless
