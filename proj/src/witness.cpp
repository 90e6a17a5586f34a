#include "atomless/witness.hpp"

#include <stdexcept>

namespace atomless {

bool BlockingCertificate::holds() const {
    std::size_t budget = 0;
    for (const auto& [x, count] : blocks) {
        if (count > 2) {
            return false;
        }
        budget += 2;
    }
    return chosen_index >= 1 && chosen_index - 1 <= budget;
}

AvoidLowResult avoid_low_certified(SubalgebraOracle& oracle, const GoodSet& a, const Natural& n,
                                   const Enumeration& e) {
    if (a.is_empty()) {
        throw std::invalid_argument("avoid_low of the empty set");
    }
    if (n < 1) {
        throw std::invalid_argument("avoid_low needs a threshold n >= 1");
    }
    AvoidLowResult result{GoodSet(), BlockingCertificate{n, 0, {}}};
    auto& blocks = result.certificate.blocks;

    GoodSet rest = a;
    for (std::size_t index = 1;; ++index) {
        auto [member, remainder] = oracle.split(rest);
        bool blocked = false;
        for (const Endpoint& x : member.endpoints()) {
            if (e.value(x) <= n) {
                blocked = true;
                if (++blocks[x] > 2) {
                    throw InvariantViolation("endpoint " + x.to_string() +
                                             " blocks three disjoint members of a split comb");
                }
            }
        }
        if (!blocked) {
            result.part = std::move(member);
            result.certificate.chosen_index = index;
            break;
        }
        rest = std::move(remainder);
    }
    if (!result.certificate.holds()) {
        throw InvariantViolation("pigeonhole certificate failed for threshold " + n.get_str());
    }
    return result;
}

GoodSet avoid_low(SubalgebraOracle& oracle, const GoodSet& a, const Natural& n, const Enumeration& e) {
    return avoid_low_certified(oracle, a, n, e).part;
}

BumpTrace bump_osc_traced(SubalgebraOracle& oracle, const GoodSet& a, const GoodSet& b, const Enumeration& e) {
    if (a.is_empty() || b.is_empty()) {
        throw std::invalid_argument("bump_osc needs nonempty sets");
    }
    if (!is_disjoint(a, b)) {
        throw std::invalid_argument("bump_osc needs disjoint sets");
    }
    constexpr auto conv = OscConvention::changes;
    BumpTrace t;
    t.osc_before = osc(a, b, conv, e);

    auto cut_a = avoid_low_certified(oracle, a, max_interest(a, b, e), e);
    t.removed_from_a = cut_a.part;
    t.certificate_a = std::move(cut_a.certificate);
    t.a_next = difference(a, t.removed_from_a);
    t.b_next = b;

    if (osc(t.a_next, b, conv, e) != t.osc_before + 1) {
        auto cut_b = avoid_low_certified(oracle, b, interest(t.a_next, e).max(), e);
        t.removed_from_b = cut_b.part;
        t.certificate_b = std::move(cut_b.certificate);
        t.b_next = difference(b, *t.removed_from_b);
    }
    t.osc_after = osc(t.a_next, t.b_next, conv, e);
    if (t.osc_after != t.osc_before + 1) {
        throw InvariantViolation("bump_osc moved osc from " + std::to_string(t.osc_before) + " to " +
                                 std::to_string(t.osc_after));
    }
    return t;
}

std::pair<GoodSet, GoodSet> bump_osc(SubalgebraOracle& oracle, const GoodSet& a, const GoodSet& b,
                                     const Enumeration& e) {
    auto t = bump_osc_traced(oracle, a, b, e);
    return {std::move(t.a_next), std::move(t.b_next)};
}

std::pair<GoodSet, GoodSet> achieve_osc(SubalgebraOracle& oracle, std::size_t n, const Enumeration& e) {
    if (n == 0) {
        throw std::invalid_argument("achieve_osc needs n >= 1");
    }
    auto [p, q] = oracle.split(GoodSet::universe());
    auto [a, b] = oracle.split(p.contains(Endpoint::zero()) ? q : p);

    // Every interest value of b now lies above int(a): Δ reads a...a b...b.
    b = avoid_low(oracle, b, interest(a, e).max(), e);
    if (osc(a, b, OscConvention::changes, e) != 1) {
        throw InvariantViolation("separated pair does not have osc 1");
    }
    for (std::size_t k = 1; k < n; ++k) {
        std::tie(a, b) = bump_osc(oracle, a, b, e);
    }
    return {std::move(a), std::move(b)};
}

WitnessTriple three_atom_witness(SubalgebraOracle& oracle, std::size_t n, OscConvention conv,
                                 const Enumeration& e) {
    std::size_t target = n;
    if (conv == OscConvention::runs) {
        if (n < 2) {
            throw std::invalid_argument("under the runs convention the engine builds colors >= 2");
        }
        target = n - 1;
    }
    const std::size_t queries_before = oracle.query_count();
    auto [b, c] = achieve_osc(oracle, target, e);
    GoodSet rest = complement(set_union(b, c));

    WitnessTriple w;
    w.atoms = sort_by_min({std::move(rest), std::move(b), std::move(c)});
    w.convention = conv;
    w.color = chi(w.atoms, conv, e);
    w.oracle = oracle.spec();
    w.log = oracle.log();
    w.queries = oracle.query_count() - queries_before;
    if (w.color != n) {
        throw InvariantViolation("witness has color " + std::to_string(w.color) + ", wanted " + std::to_string(n));
    }
    return w;
}

std::string_view to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::ok: return "ok";
        case VerifyStatus::empty_atom: return "empty_atom";
        case VerifyStatus::overlapping_atoms: return "overlapping_atoms";
        case VerifyStatus::not_a_partition: return "not_a_partition";
        case VerifyStatus::not_min_sorted: return "not_min_sorted";
        case VerifyStatus::zero_not_in_least_atom: return "zero_not_in_least_atom";
        case VerifyStatus::color_mismatch: return "color_mismatch";
    }
    return "unknown";
}

VerifyResult verify_witness(const WitnessTriple& w, const Enumeration& e) {
    const auto& atoms = w.atoms;
    for (std::size_t i = 0; i < 3; ++i) {
        if (atoms[i].is_empty()) {
            return {VerifyStatus::empty_atom, "atom " + std::to_string(i) + " is empty"};
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!is_disjoint(atoms[i], atoms[j])) {
                return {VerifyStatus::overlapping_atoms,
                        "atoms " + std::to_string(i) + " and " + std::to_string(j) + " intersect"};
            }
        }
    }
    if (set_union(set_union(atoms[0], atoms[1]), atoms[2]) != GoodSet::universe()) {
        return {VerifyStatus::not_a_partition, "atoms do not cover [0,1)"};
    }
    if (!(atoms[0].min_elem() < atoms[1].min_elem() && atoms[1].min_elem() < atoms[2].min_elem())) {
        return {VerifyStatus::not_min_sorted, "atoms are not ordered by least element"};
    }
    if (!atoms[0].contains(Endpoint::zero())) {
        return {VerifyStatus::zero_not_in_least_atom, "0 is not in the first atom"};
    }
    const std::size_t by_chi = chi(atoms, w.convention, e);
    const std::size_t by_runs = osc_runs_oracle(atoms[1], atoms[2], w.convention, e);
    if (by_chi != w.color || by_runs != w.color) {
        return {VerifyStatus::color_mismatch, "claimed color " + std::to_string(w.color) + ", chi gives " +
                                                  std::to_string(by_chi) + ", run count gives " +
                                                  std::to_string(by_runs)};
    }
    return {};
}

}  // namespace atomless
