#include "atomless/subalgebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "atomless/rng.hpp"

namespace atomless {

std::pair<GoodSet, GoodSet> SubalgebraOracle::split(const GoodSet& a) {
    if (a.is_empty()) {
        throw std::invalid_argument("split of the empty set");
    }
    ++queries_;
    if (const auto it = memo_.find(a); it != memo_.end()) {
        const SplitRecord& r = log_[it->second];
        return {r.part, r.rest};
    }
    GoodSet part = choose_part(a);
    GoodSet rest = difference(a, part);
    if (part.is_empty() || rest.is_empty() || !is_subset(part, a)) {
        throw std::logic_error(spec() + " oracle returned an improper split of " + a.to_string());
    }
    memo_.emplace(a, log_.size());
    log_.push_back({a, part, rest});
    return {std::move(part), std::move(rest)};
}

GoodSet WholeAlgebraOracle::choose_part(const GoodSet& a) {
    const Interval first = a.interval_at(0);
    return GoodSet::interval(first.lower, midpoint(first.lower, first.upper));
}

GoodSet RandomSplitOracle::choose_part(const GoodSet& a) {
    Rng rng(splitmix64(seed_ ^ fnv1a(a.to_string())));
    const std::size_t n = a.interval_count();
    const std::uint64_t max_weight = 2 + a.endpoints().size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Partial Fisher-Yates: the first `pieces` entries are distinct random intervals.
    const std::size_t pieces = std::min<std::size_t>(n, rng.uniform(1, 3));
    for (std::size_t k = 0; k < pieces; ++k) {
        std::swap(order[k], order[rng.uniform(k, n - 1)]);
    }

    std::vector<Interval> raw;
    for (std::size_t k = 0; k < pieces; ++k) {
        const Interval iv = a.interval_at(order[k]);
        Endpoint x = weighted_mediant(iv.lower, iv.upper, rng.uniform(1, max_weight), rng.uniform(1, max_weight));
        Endpoint y = weighted_mediant(x, iv.upper, rng.uniform(1, max_weight), rng.uniform(1, max_weight));
        raw.push_back({std::move(x), std::move(y)});
    }
    return GoodSet::normalize(raw);
}

std::unique_ptr<SubalgebraOracle> whole_algebra_oracle() { return std::make_unique<WholeAlgebraOracle>(); }

std::unique_ptr<SubalgebraOracle> random_split_oracle(std::uint64_t seed) {
    return std::make_unique<RandomSplitOracle>(seed);
}

std::unique_ptr<SubalgebraOracle> make_oracle(std::string_view spec) {
    if (spec == "whole") {
        return whole_algebra_oracle();
    }
    constexpr std::string_view prefix = "random:";
    if (spec.starts_with(prefix)) {
        const std::string_view digits = spec.substr(prefix.size());
        std::uint64_t seed = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (!digits.empty() && ec == std::errc() && end == digits.data() + digits.size()) {
            return random_split_oracle(seed);
        }
    }
    throw std::invalid_argument("unknown oracle spec '" + std::string(spec) + "' (expected whole or random:<u64>)");
}

std::vector<GoodSet> disjoint_family(SubalgebraOracle& oracle, const GoodSet& a, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("disjoint_family needs m >= 1");
    }
    if (a.is_empty()) {
        throw std::invalid_argument("disjoint_family of the empty set");
    }
    std::vector<GoodSet> out;
    out.reserve(m);
    GoodSet rest = a;
    for (std::size_t k = 1; k < m; ++k) {
        auto [part, remainder] = oracle.split(rest);
        out.push_back(std::move(part));
        rest = std::move(remainder);
    }
    out.push_back(std::move(rest));
    return out;
}

}  // namespace atomless
