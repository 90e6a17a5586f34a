#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomless/good_set.hpp"
#include "atomless/oscillation.hpp"
#include "atomless/subalgebra.hpp"

namespace atomless {

/// Raised when a step that cannot fail if the constructions are correct does
/// fail: no unblocked member in a disjoint family, a blocker hitting three
/// members, or a bump that does not raise osc by one. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Record of one pigeonhole search. An endpoint x with e(x) <= threshold
/// "blocks" a family member whose endpoints include x.
struct BlockingCertificate {
    Natural threshold;
    /// 1-based position of the returned member in the split comb.
    std::size_t chosen_index = 0;
    /// Blocker -> number of scanned members it blocks.
    std::map<Endpoint, std::size_t> blocks;

    /// Every blocker blocks at most two members, and the members skipped
    /// before the chosen one are covered by that budget.
    bool holds() const;
};

struct AvoidLowResult {
    GoodSet part;
    BlockingCertificate certificate;
};

/// Finds a nonempty b ⊆ a in the oracle's subalgebra with min(int(b)) > n.
///
/// Walks the comb split(a) = (p1, r1), split(r1) = (p2, r2), ... and returns
/// the first p_k none of whose endpoints x has e(x) <= n. The p_k are pairwise
/// disjoint and each x blocks at most two of them, so one of the first
/// 2|L|+1 members is free, L = { x ∈ X ∪ {1} : e(x) <= n }. The comb is
/// extended lazily, which keeps the search independent of |L|.
///
/// Requires a nonempty and n >= 1.
AvoidLowResult avoid_low_certified(SubalgebraOracle& oracle, const GoodSet& a, const Natural& n,
                                   const Enumeration& e = default_enumeration());

GoodSet avoid_low(SubalgebraOracle& oracle, const GoodSet& a, const Natural& n,
                  const Enumeration& e = default_enumeration());

struct BumpTrace {
    GoodSet a_next;
    GoodSet b_next;
    /// Piece removed from a; its interest values all exceed max(int(a) ∪ int(b)).
    GoodSet removed_from_a;
    /// Piece removed from b when the first step alone did not raise osc.
    std::optional<GoodSet> removed_from_b;
    std::size_t osc_before = 0;
    std::size_t osc_after = 0;
    BlockingCertificate certificate_a;
    std::optional<BlockingCertificate> certificate_b;
};

/// Given nonempty disjoint a, b, returns a' ⊆ a, b' ⊆ b with
/// osc(a', b') = osc(a, b) + 1 under the `changes` convention.
///
/// Cutting a piece c with large interest values out of a appends a run of
/// a-labels above everything in int(a) Δ int(b). That raises osc exactly when
/// the previous top run belonged to b; otherwise a piece cut from b then
/// appends a b-run on top.
BumpTrace bump_osc_traced(SubalgebraOracle& oracle, const GoodSet& a, const GoodSet& b,
                          const Enumeration& e = default_enumeration());

std::pair<GoodSet, GoodSet> bump_osc(SubalgebraOracle& oracle, const GoodSet& a, const GoodSet& b,
                                     const Enumeration& e = default_enumeration());

/// Disjoint nonempty a, b in the oracle's subalgebra, neither containing 0,
/// with osc(a, b) = n under `changes`. Throws std::invalid_argument for n = 0.
std::pair<GoodSet, GoodSet> achieve_osc(SubalgebraOracle& oracle, std::size_t n,
                                        const Enumeration& e = default_enumeration());

/// Atoms of a 3-atom subalgebra together with its color.
struct WitnessTriple {
    AtomTriple atoms;  // sorted by least element
    std::size_t color = 0;
    OscConvention convention = OscConvention::changes;
    std::string oracle;
    std::vector<SplitRecord> log;
    /// Split calls made while building, memo hits included. Not serialized.
    std::size_t queries = 0;
};

/// Builds a 3-atom subalgebra of color n inside the oracle's subalgebra: the
/// atoms are a pair (b, c) from achieve_osc and the complement of b ∪ c, which
/// holds 0 and is therefore the least atom.
///
/// Under `runs` the color of such a pair is its `changes` value plus one, so
/// the pair is built for n - 1 and n must be at least 2.
WitnessTriple three_atom_witness(SubalgebraOracle& oracle, std::size_t n,
                                 OscConvention conv = OscConvention::changes,
                                 const Enumeration& e = default_enumeration());

enum class VerifyStatus {
    ok,
    empty_atom,
    overlapping_atoms,
    not_a_partition,
    not_min_sorted,
    zero_not_in_least_atom,
    color_mismatch,
};

std::string_view to_string(VerifyStatus status);

struct VerifyResult {
    VerifyStatus status = VerifyStatus::ok;
    std::string detail;

    explicit operator bool() const { return status == VerifyStatus::ok; }
};

/// Rechecks every witness invariant from the atoms alone; the provenance log
/// is not consulted. The color is checked against both chi and the run
/// counting oracle.
VerifyResult verify_witness(const WitnessTriple& w, const Enumeration& e = default_enumeration());

}  // namespace atomless
