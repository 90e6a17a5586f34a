#include "atomless/oscillation.hpp"

#include <algorithm>
#include <stdexcept>

namespace atomless {

std::string_view to_string(OscConvention conv) {
    return conv == OscConvention::changes ? "changes" : "runs";
}

std::optional<OscConvention> parse_convention(std::string_view text) {
    if (text == "changes") {
        return OscConvention::changes;
    }
    if (text == "runs") {
        return OscConvention::runs;
    }
    return std::nullopt;
}

InterestSet::InterestSet(std::vector<Natural> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool InterestSet::contains(const Natural& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

const Natural& InterestSet::min() const {
    if (values_.empty()) {
        throw std::domain_error("min of an empty interest set");
    }
    return values_.front();
}

const Natural& InterestSet::max() const {
    if (values_.empty()) {
        throw std::domain_error("max of an empty interest set");
    }
    return values_.back();
}

InterestSet interest(const GoodSet& a, const Enumeration& e) {
    std::vector<Natural> values;
    values.reserve(a.endpoints().size());
    for (const auto& u : a.endpoints()) {
        values.push_back(e.value(u));
    }
    return InterestSet(std::move(values));
}

Natural max_interest(const GoodSet& a, const GoodSet& b, const Enumeration& e) {
    const InterestSet ia = interest(a, e);
    const InterestSet ib = interest(b, e);
    if (ia.empty()) {
        return ib.max();
    }
    if (ib.empty()) {
        return ia.max();
    }
    return std::max(ia.max(), ib.max());
}

bool oscillates_at(const InterestSet& i0, const InterestSet& i1, const Natural& i, OscConvention conv) {
    const bool in0 = i0.contains(i);
    const bool in1 = i1.contains(i);
    if (in0 == in1) {
        return false;
    }
    // k is the side holding i; look for j = max{ j < i : j ∈ int(a0) Δ int(a1) }.
    const InterestSet& own = in0 ? i0 : i1;
    const InterestSet& other = in0 ? i1 : i0;

    const auto& ov = own.values();
    const auto& tv = other.values();
    auto p = std::lower_bound(ov.begin(), ov.end(), i);
    auto q = std::lower_bound(tv.begin(), tv.end(), i);
    while (p != ov.begin() || q != tv.begin()) {
        if (p == ov.begin()) {
            return true;  // j lies in the other set only
        }
        if (q == tv.begin()) {
            return false;  // j lies in the own set only
        }
        const Natural& x = *std::prev(p);
        const Natural& y = *std::prev(q);
        if (x == y) {
            --p;
            --q;  // shared value, not in Δ
        } else {
            return y > x;
        }
    }
    return conv == OscConvention::runs;
}

bool oscillates_at(const GoodSet& a0, const GoodSet& a1, const Natural& i, OscConvention conv,
                   const Enumeration& e) {
    return oscillates_at(interest(a0, e), interest(a1, e), i, conv);
}

std::size_t osc(const InterestSet& i0, const InterestSet& i1, OscConvention conv) {
    std::vector<Natural> candidates;
    std::set_union(i0.values().begin(), i0.values().end(), i1.values().begin(), i1.values().end(),
                   std::back_inserter(candidates));
    return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(), [&](const Natural& i) {
        return oscillates_at(i0, i1, i, conv);
    }));
}

std::size_t osc(const GoodSet& a0, const GoodSet& a1, OscConvention conv, const Enumeration& e) {
    return osc(interest(a0, e), interest(a1, e), conv);
}

std::vector<LabeledValue> labeled_difference(const InterestSet& i0, const InterestSet& i1) {
    const auto& x = i0.values();
    const auto& y = i1.values();
    std::vector<LabeledValue> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i] < y[j])) {
            out.push_back({x[i++], Side::first});
        } else if (i == x.size() || y[j] < x[i]) {
            out.push_back({y[j++], Side::second});
        } else {
            ++i;
            ++j;
        }
    }
    return out;
}

std::string format_labeled(const std::vector<LabeledValue>& seq) {
    std::string out;
    for (const auto& lv : seq) {
        if (!out.empty()) {
            out += ' ';
        }
        out += lv.value.get_str();
        out += lv.side == Side::first ? ":a" : ":b";
    }
    return out;
}

std::size_t osc_runs_oracle(const InterestSet& i0, const InterestSet& i1, OscConvention conv) {
    const auto seq = labeled_difference(i0, i1);
    if (seq.empty()) {
        return 0;
    }
    std::size_t changes = 0;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (seq[k].side != seq[k - 1].side) {
            ++changes;
        }
    }
    return conv == OscConvention::runs ? changes + 1 : changes;
}

std::size_t osc_runs_oracle(const GoodSet& a0, const GoodSet& a1, OscConvention conv, const Enumeration& e) {
    return osc_runs_oracle(interest(a0, e), interest(a1, e), conv);
}

AtomTriple sort_by_min(AtomTriple atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const GoodSet& x, const GoodSet& y) { return x.min_elem() < y.min_elem(); });
    return atoms;
}

std::size_t chi(const AtomTriple& atoms, OscConvention conv, const Enumeration& e) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_empty()) {
            throw std::invalid_argument("chi: atom " + std::to_string(i) + " is empty");
        }
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            if (!is_disjoint(atoms[i], atoms[j])) {
                throw std::invalid_argument("chi: atoms " + std::to_string(i) + " and " + std::to_string(j) +
                                            " intersect");
            }
        }
    }
    const AtomTriple sorted = sort_by_min(atoms);
    return osc(sorted[1], sorted[2], conv, e);
}

}  // namespace atomless
