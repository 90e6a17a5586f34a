#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atomless/endpoint.hpp"

namespace atomless {

/// Half-open interval [lower, upper) with lower < upper.
struct Interval {
    Endpoint lower;
    Endpoint upper;
};

/// A good subset of X = [0,1) ∩ Q: a finite union of half-open intervals,
/// stored as its canonical strictly increasing bound sequence
/// l0 < u0 < l1 < u1 < ... . Touching intervals are always merged, so two
/// GoodSets denote the same set of rationals iff their bounds are equal.
class GoodSet {
public:
    /// The empty set.
    GoodSet() = default;

    /// Builds the canonical form of the union of `raw`. Throws
    /// std::invalid_argument if some interval has lower >= upper.
    static GoodSet normalize(std::span<const Interval> raw);
    static GoodSet normalize(std::initializer_list<Interval> raw) {
        return normalize(std::span<const Interval>(raw.begin(), raw.size()));
    }

    /// Takes an already canonical bound sequence; throws std::invalid_argument
    /// if it is not one.
    static GoodSet from_bounds(std::vector<Endpoint> bounds);

    static GoodSet empty() { return GoodSet(); }
    /// X itself, i.e. [0,1).
    static GoodSet universe();
    static GoodSet interval(Endpoint lower, Endpoint upper);

    bool is_empty() const { return bounds_.empty(); }
    std::size_t interval_count() const { return bounds_.size() / 2; }
    Interval interval_at(std::size_t i) const { return {bounds_[2 * i], bounds_[2 * i + 1]}; }
    std::vector<Interval> intervals() const;

    /// Im(seq_a), increasing.
    const std::vector<Endpoint>& endpoints() const { return bounds_; }

    /// Least element; throws std::domain_error on the empty set.
    const Endpoint& min_elem() const;

    /// Membership of a point of X. Throws std::invalid_argument for x = 1,
    /// which is not a point of X.
    bool contains(const Endpoint& x) const;

    friend bool operator==(const GoodSet&, const GoodSet&) = default;
    /// Lexicographic on bounds; only meaningful as a key order.
    friend auto operator<=>(const GoodSet& a, const GoodSet& b) { return a.bounds_ <=> b.bounds_; }

    /// "∅" or "+"-joined intervals, e.g. "[1/3,1/2)+[2/3,1)".
    std::string to_string() const;

private:
    explicit GoodSet(std::vector<Endpoint> bounds) : bounds_(std::move(bounds)) {}
    friend GoodSet combine(const GoodSet&, const GoodSet&, bool (*)(bool, bool));

    std::vector<Endpoint> bounds_;
};

std::ostream& operator<<(std::ostream& os, const GoodSet& a);

GoodSet set_union(const GoodSet& a, const GoodSet& b);
GoodSet intersect(const GoodSet& a, const GoodSet& b);
GoodSet complement(const GoodSet& a);
GoodSet difference(const GoodSet& a, const GoodSet& b);
GoodSet symmetric_difference(const GoodSet& a, const GoodSet& b);

bool is_subset(const GoodSet& a, const GoodSet& b);
bool is_disjoint(const GoodSet& a, const GoodSet& b);

inline GoodSet normalize(std::span<const Interval> raw) { return GoodSet::normalize(raw); }
inline bool contains_point(const GoodSet& a, const Endpoint& x) { return a.contains(x); }
inline const Endpoint& min_elem(const GoodSet& a) { return a.min_elem(); }
inline const std::vector<Endpoint>& endpoints_of(const GoodSet& a) { return a.endpoints(); }

/// Deterministic random canonical set with at most `max_intervals` intervals
/// whose endpoints have denominators <= `max_denominator`. Intended as a test
/// input generator.
GoodSet random_good(std::uint64_t seed, unsigned max_intervals, unsigned max_denominator);

}  // namespace atomless
