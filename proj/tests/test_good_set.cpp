#include <doctest.h>

#include <set>

#include "atomless/good_set.hpp"
#include "atomless/text.hpp"
#include "support.hpp"

using namespace atomless;
using testing::gs;

namespace {

const GoodSet X = GoodSet::universe();

bool raw_member(const std::vector<Interval>& raw, const Endpoint& x) {
    for (const auto& iv : raw) {
        if (iv.lower <= x && x < iv.upper) {
            return true;
        }
    }
    return false;
}

std::vector<Endpoint> sample_points(unsigned max_den) {
    auto pts = level_set(max_den);
    pts.pop_back();  // drop 1, which is not in X
    return pts;
}

bool canonical(const GoodSet& a) {
    const auto& b = a.endpoints();
    if (b.size() % 2 != 0) {
        return false;
    }
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (!(b[i - 1] < b[i])) {
            return false;
        }
    }
    return b.empty() || b.back() <= Endpoint::one();
}

}  // namespace

TEST_CASE("normalize merges touching and overlapping intervals") {
    CHECK(GoodSet::normalize({{Endpoint(0, 1), Endpoint(1, 2)}, {Endpoint(1, 2), Endpoint(1, 1)}}) == X);
    CHECK(GoodSet::normalize(std::span<const Interval>{}).is_empty());
    CHECK(GoodSet::normalize({{Endpoint(1, 3), Endpoint(2, 3)}, {Endpoint(1, 2), Endpoint(3, 4)}}) == gs(1, 3, 3, 4));
    CHECK(GoodSet::normalize({{Endpoint(1, 2), Endpoint(3, 4)}, {Endpoint(1, 4), Endpoint(1, 3)}}).to_string() ==
          "[1/4,1/3)+[1/2,3/4)");
    CHECK_THROWS_AS(GoodSet::normalize({{Endpoint(1, 2), Endpoint(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(GoodSet::normalize({{Endpoint(2, 3), Endpoint(1, 2)}}), std::invalid_argument);
}

TEST_CASE("from_bounds accepts only canonical sequences") {
    CHECK(GoodSet::from_bounds({Endpoint(0, 1), Endpoint(1, 1)}) == X);
    CHECK_THROWS(GoodSet::from_bounds({Endpoint(0, 1)}));
    CHECK_THROWS(GoodSet::from_bounds({Endpoint(0, 1), Endpoint(1, 2), Endpoint(1, 2), Endpoint(1, 1)}));
}

TEST_CASE("Boolean operations on small examples") {
    CHECK(complement(GoodSet::empty()) == X);
    CHECK(complement(X).is_empty());
    CHECK(intersect(gs(0, 1, 1, 2), gs(1, 2, 1, 1)).is_empty());
    CHECK(difference(gs(1, 4, 1, 1), gs(1, 2, 3, 4)).to_string() == "[1/4,1/2)+[3/4,1)");
    CHECK(set_union(gs(0, 1, 1, 2), gs(1, 2, 1, 1)) == X);
    CHECK(symmetric_difference(gs(0, 1, 1, 2), gs(1, 4, 3, 4)).to_string() == "[0,1/4)+[1/2,3/4)");
}

TEST_CASE("membership follows half-open intervals") {
    CHECK(gs(1, 3, 1, 2).contains(Endpoint(1, 3)));
    CHECK_FALSE(gs(1, 3, 1, 2).contains(Endpoint(1, 2)));
    CHECK(X.contains(Endpoint(17, 19)));
    CHECK_FALSE(GoodSet::empty().contains(Endpoint::zero()));
    CHECK_THROWS_AS(X.contains(Endpoint::one()), std::invalid_argument);
}

TEST_CASE("set predicates") {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const GoodSet a = random_good(rng.next(), 4, 20);
        const GoodSet b = random_good(rng.next(), 4, 20);
        CHECK(is_subset(GoodSet::empty(), a));
        CHECK(is_subset(a, set_union(a, b)));
        CHECK(is_subset(intersect(a, b), a));
        CHECK(is_disjoint(a, complement(a)));
        CHECK(is_subset(a, b) == difference(a, b).is_empty());
    }
    CHECK(is_disjoint(gs(0, 1, 1, 2), gs(1, 2, 1, 1)));
    CHECK(is_subset(gs(1, 3, 1, 2), gs(1, 4, 3, 4)));
    CHECK_FALSE(is_subset(gs(1, 4, 3, 4), gs(1, 3, 1, 2)));
}

TEST_CASE("least element and endpoints") {
    CHECK(X.min_elem() == Endpoint::zero());
    const GoodSet two = parse_good_set("[1/3,1/2)+[2/3,1)");
    CHECK(two.min_elem() == Endpoint(1, 3));
    CHECK_THROWS_AS(GoodSet::empty().min_elem(), std::domain_error);
    CHECK(endpoints_of(GoodSet::empty()).empty());
    CHECK(endpoints_of(X) == std::vector{Endpoint::zero(), Endpoint::one()});
    CHECK(endpoints_of(two) == std::vector{Endpoint(1, 3), Endpoint(1, 2), Endpoint(2, 3), Endpoint::one()});
}

TEST_CASE("random_good") {
    // Every canonical set with one interval and denominators <= 2.
    const std::set<GoodSet> allowed{GoodSet::empty(), gs(0, 1, 1, 2), gs(1, 2, 1, 1), X};
    std::set<GoodSet> seen;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const GoodSet a = random_good(s, 1, 2);
        CHECK(allowed.count(a) == 1);
        seen.insert(a);
    }
    CHECK(seen == allowed);

    for (std::uint64_t s = 0; s < 200; ++s) {
        const GoodSet a = random_good(s, 3, 8);
        CHECK(a == random_good(s, 3, 8));
        CHECK(canonical(a));
        CHECK(a.interval_count() <= 3);
        for (const auto& x : a.endpoints()) {
            CHECK(x.den() <= 8);
        }
    }
    CHECK_THROWS(random_good(0, 0, 5));
    CHECK_THROWS(random_good(0, 2, 1));
}

TEST_CASE("Boolean algebra laws on random sets") {
    Rng rng(2024);
    for (int k = 0; k < 300; ++k) {
        const GoodSet a = random_good(rng.next(), 4, 30);
        const GoodSet b = random_good(rng.next(), 4, 30);
        const GoodSet c = random_good(rng.next(), 4, 30);
        CHECK(set_union(a, b) == set_union(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, set_union(b, c)) == set_union(intersect(a, b), intersect(a, c)));
        CHECK(set_union(a, intersect(b, c)) == intersect(set_union(a, b), set_union(a, c)));
        CHECK(complement(set_union(a, b)) == intersect(complement(a), complement(b)));
        CHECK(complement(intersect(a, b)) == set_union(complement(a), complement(b)));
        CHECK(complement(complement(a)) == a);
        CHECK(set_union(a, intersect(a, b)) == a);
        CHECK(intersect(a, set_union(a, b)) == a);
        CHECK(set_union(a, complement(a)) == X);
        CHECK(intersect(a, complement(a)).is_empty());
        CHECK(difference(a, b) == intersect(a, complement(b)));
    }
}

TEST_CASE("normalize is idempotent and preserves pointwise membership") {
    Rng rng(77);
    const auto points = sample_points(24);
    for (int k = 0; k < 300; ++k) {
        const auto raw = testing::random_raw(rng, 5, 24);
        const GoodSet a = GoodSet::normalize(raw);
        CHECK(canonical(a));
        CHECK(GoodSet::normalize(a.intervals()) == a);
        for (const auto& x : points) {
            CHECK(a.contains(x) == raw_member(raw, x));
        }
    }
}

TEST_CASE("removing an interior piece adds its endpoints") {
    Rng rng(9);
    for (int k = 0; k < 200; ++k) {
        const GoodSet a = random_good(rng.next(), 3, 12);
        if (a.is_empty()) {
            continue;
        }
        // c: one interval strictly inside a random interval of a.
        const Interval iv = a.interval_at(rng.uniform(0, a.interval_count() - 1));
        const Endpoint x = weighted_mediant(iv.lower, iv.upper, rng.uniform(1, 5), rng.uniform(1, 5));
        const Endpoint y = weighted_mediant(x, iv.upper, rng.uniform(1, 5), rng.uniform(1, 5));
        const GoodSet c = GoodSet::interval(x, y);
        std::vector<Endpoint> expected;
        std::set_union(a.endpoints().begin(), a.endpoints().end(), c.endpoints().begin(), c.endpoints().end(),
                       std::back_inserter(expected));
        CHECK(difference(a, c).endpoints() == expected);
    }
}
