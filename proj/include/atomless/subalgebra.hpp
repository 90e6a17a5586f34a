#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atomless/good_set.hpp"

namespace atomless {

struct SplitRecord {
    GoodSet query;
    GoodSet part;
    GoodSet rest;
};

/// Stand-in for a countable atomless subalgebra C of B, presented only through
/// a splitting operation. Everything the witness engine builds is a Boolean
/// combination of split answers and the universe, so it lies in the subalgebra
/// generated by those answers.
///
/// Answers are memoized per argument, so the generated subalgebra is one
/// coherent object across a run. Not thread-safe; use one instance per thread.
class SubalgebraOracle {
public:
    virtual ~SubalgebraOracle() = default;

    /// Returns (b, a \ b) with ∅ ⊊ b ⊊ a. Throws std::invalid_argument on an
    /// empty argument.
    std::pair<GoodSet, GoodSet> split(const GoodSet& a);

    /// Distinct queries in the order they were first asked.
    const std::vector<SplitRecord>& log() const { return log_; }

    /// Total split calls, memo hits included.
    std::size_t query_count() const { return queries_; }

    /// "whole" or "random:<seed>".
    virtual std::string spec() const = 0;

protected:
    /// Proper nonempty subset of a nonempty `a`.
    virtual GoodSet choose_part(const GoodSet& a) = 0;

private:
    std::map<GoodSet, std::size_t> memo_;  // query -> index into log_
    std::vector<SplitRecord> log_;
    std::size_t queries_ = 0;
};

/// C = B. Splits off the lower half of the first interval.
class WholeAlgebraOracle final : public SubalgebraOracle {
public:
    std::string spec() const override { return "whole"; }

protected:
    GoodSet choose_part(const GoodSet& a) override;
};

/// Seeded pseudo-random subalgebra. The part split off from `a` is one to
/// three pieces [x, y) placed strictly inside distinct intervals of `a`, with
/// x and y weighted mediants of the surrounding bounds. The weights grow with
/// the number of bounds of `a`, so denominators keep climbing along split
/// chains. Each answer depends only on the seed and `a`.
class RandomSplitOracle final : public SubalgebraOracle {
public:
    explicit RandomSplitOracle(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::string spec() const override { return "random:" + std::to_string(seed_); }

protected:
    GoodSet choose_part(const GoodSet& a) override;

private:
    std::uint64_t seed_;
};

std::unique_ptr<SubalgebraOracle> whole_algebra_oracle();
std::unique_ptr<SubalgebraOracle> random_split_oracle(std::uint64_t seed);

/// Builds an oracle from "whole" or "random:<u64>"; throws std::invalid_argument
/// on anything else.
std::unique_ptr<SubalgebraOracle> make_oracle(std::string_view spec);

/// m pairwise disjoint nonempty members of the oracle's subalgebra, each
/// inside `a`, from the left-leaning comb split(a) = (p1, r1),
/// split(r1) = (p2, r2), ...; returns p1, ..., p_{m-1}, r_{m-1}.
std::vector<GoodSet> disjoint_family(SubalgebraOracle& oracle, const GoodSet& a, std::size_t m);

}  // namespace atomless
