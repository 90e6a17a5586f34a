#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomless/endpoint.hpp"
#include "atomless/good_set.hpp"

namespace atomless {

/// Reading of the "if j exists then ..." clause in the oscillation definition.
///  - changes: the clause requires j to exist, so osc counts side changes
///    along the sorted symmetric difference of interest sets.
///  - runs: the clause holds vacuously when no j exists, so the least element
///    of the symmetric difference also oscillates and osc counts runs.
enum class OscConvention { changes, runs };

std::string_view to_string(OscConvention conv);
std::optional<OscConvention> parse_convention(std::string_view text);

/// int(a) = { e(u) : u an endpoint of a }, sorted and duplicate-free.
class InterestSet {
public:
    InterestSet() = default;
    explicit InterestSet(std::vector<Natural> values);

    const std::vector<Natural>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    bool contains(const Natural& v) const;
    /// Throws std::domain_error when empty.
    const Natural& min() const;
    const Natural& max() const;

    friend bool operator==(const InterestSet&, const InterestSet&) = default;

private:
    std::vector<Natural> values_;
};

InterestSet interest(const GoodSet& a, const Enumeration& e = default_enumeration());

/// Largest value of int(a) ∪ int(b); the sets must not both be empty.
Natural max_interest(const GoodSet& a, const GoodSet& b, const Enumeration& e = default_enumeration());

bool oscillates_at(const InterestSet& i0, const InterestSet& i1, const Natural& i, OscConvention conv);
bool oscillates_at(const GoodSet& a0, const GoodSet& a1, const Natural& i, OscConvention conv,
                   const Enumeration& e = default_enumeration());

/// Number of i at which the two sets oscillate, evaluated point by point from
/// the definition. Only members of int(a0) ∪ int(a1) can satisfy the first
/// clause, so those are the only candidates scanned.
std::size_t osc(const InterestSet& i0, const InterestSet& i1, OscConvention conv);
std::size_t osc(const GoodSet& a0, const GoodSet& a1, OscConvention conv = OscConvention::changes,
                const Enumeration& e = default_enumeration());

enum class Side { first, second };

struct LabeledValue {
    Natural value;
    Side side;
};

/// int(a0) Δ int(a1) in increasing order, each element tagged with the set it
/// comes from.
std::vector<LabeledValue> labeled_difference(const InterestSet& i0, const InterestSet& i1);

/// "2:a 3:a 4:b 5:b".
std::string format_labeled(const std::vector<LabeledValue>& seq);

/// Independent check of osc: counts adjacent opposite-side pairs in the
/// labeled symmetric difference (plus one under `runs` when it is nonempty).
std::size_t osc_runs_oracle(const InterestSet& i0, const InterestSet& i1, OscConvention conv);
std::size_t osc_runs_oracle(const GoodSet& a0, const GoodSet& a1, OscConvention conv = OscConvention::changes,
                            const Enumeration& e = default_enumeration());

using AtomTriple = std::array<GoodSet, 3>;

/// Orders atoms by their least element.
AtomTriple sort_by_min(AtomTriple atoms);

/// Color of the 3-atom subalgebra with the given atoms: osc of the second and
/// third atom in min-order. Throws std::invalid_argument if an atom is empty
/// or two atoms intersect.
std::size_t chi(const AtomTriple& atoms, OscConvention conv = OscConvention::changes,
                const Enumeration& e = default_enumeration());

}  // namespace atomless
