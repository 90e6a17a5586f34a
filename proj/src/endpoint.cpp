#include "atomless/endpoint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace atomless {

namespace {

// Largest n accepted by DenominatorEnumeration::level_set; the level set has
// roughly 3n²/π² points.
constexpr unsigned long kMaxMaterializedLevel = 4096;

void check_unit_range(const mpq_class& v) {
    if (v < 0 || v > 1) {
        throw std::invalid_argument("endpoint " + v.get_str() + " lies outside [0,1]");
    }
}

}  // namespace

Endpoint::Endpoint() : value_(0) {}

Endpoint::Endpoint(std::int64_t num, std::int64_t den)
    : Endpoint(Natural(std::to_string(num)), Natural(std::to_string(den))) {}

Endpoint::Endpoint(const Natural& num, const Natural& den) {
    if (den == 0) {
        throw std::invalid_argument("endpoint with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
    check_unit_range(value_);
}

std::string Endpoint::to_string() const {
    if (den() == 1) {
        return num().get_str();
    }
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Endpoint& x) { return os << x.to_string(); }

std::strong_ordering compare(const Endpoint& x, const Endpoint& y) { return x <=> y; }

Endpoint midpoint(const Endpoint& x, const Endpoint& y) {
    mpq_class m = (x.value_ + y.value_) / 2;
    m.canonicalize();
    return Endpoint(std::move(m));
}

Endpoint weighted_mediant(const Endpoint& x, const Endpoint& y, unsigned long i, unsigned long j) {
    if (i == 0 || j == 0) {
        throw std::invalid_argument("mediant weights must be positive");
    }
    mpq_class m(x.num() * i + y.num() * j, x.den() * i + y.den() * j);
    m.canonicalize();
    return Endpoint(std::move(m));
}

std::vector<Endpoint> DenominatorEnumeration::level_set(const Natural& n) const {
    std::vector<Endpoint> out;
    if (n < 1) {
        return out;
    }
    if (n > kMaxMaterializedLevel) {
        throw std::length_error("level set for n = " + n.get_str() + " is too large to materialize");
    }
    const unsigned long max_den = n.get_ui();
    for (unsigned long q = 1; q <= max_den; ++q) {
        for (unsigned long p = 0; p <= q; ++p) {
            if (std::gcd(p, q) == 1) {
                out.emplace_back(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Enumeration& default_enumeration() {
    static const DenominatorEnumeration instance;
    return instance;
}

}  // namespace atomless
