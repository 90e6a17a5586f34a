#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace atomless {

/// Arbitrary-precision natural number. Enumeration values and interest sets
/// use it because endpoint denominators grow without bound during witness
/// construction.
using Natural = mpz_class;

/// A point of X ∪ {1}, where X = [0,1) ∩ Q. Always stored in lowest terms.
class Endpoint {
public:
    /// The point 0.
    Endpoint();
    Endpoint(std::int64_t num, std::int64_t den);
    /// Reduces num/den; throws std::invalid_argument unless 0 <= num/den <= 1.
    Endpoint(const Natural& num, const Natural& den);

    static Endpoint zero() { return Endpoint(); }
    static Endpoint one() { return Endpoint(1, 1); }

    const Natural& num() const { return value_.get_num(); }
    const Natural& den() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    bool is_one() const { return value_ == 1; }
    bool is_zero() const { return value_ == 0; }

    /// "p/q" in lowest terms; 0 and 1 print as "0" and "1".
    std::string to_string() const;

    friend bool operator==(const Endpoint& x, const Endpoint& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Endpoint& x, const Endpoint& y) {
        const int c = cmp(x.value_, y.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Endpoint(mpq_class v) : value_(std::move(v)) {}
    friend Endpoint midpoint(const Endpoint&, const Endpoint&);
    friend Endpoint weighted_mediant(const Endpoint&, const Endpoint&, unsigned long, unsigned long);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Endpoint& x);

/// Three-way comparison under the usual order of the rationals.
std::strong_ordering compare(const Endpoint& x, const Endpoint& y);

/// (x + y) / 2.
Endpoint midpoint(const Endpoint& x, const Endpoint& y);

/// (i·p + j·r) / (i·q + j·s) for x = p/q, y = r/s. Lies strictly between x
/// and y whenever x != y and i, j >= 1.
Endpoint weighted_mediant(const Endpoint& x, const Endpoint& y, unsigned long i, unsigned long j);

/// A finite-to-one map e: X ∪ {1} -> naturals.
class Enumeration {
public:
    virtual ~Enumeration() = default;

    virtual Natural value(const Endpoint& x) const = 0;

    /// All x with value(x) <= n, sorted and duplicate-free.
    virtual std::vector<Endpoint> level_set(const Natural& n) const = 0;

    virtual std::string name() const = 0;
};

/// e(p/q) = q for p/q in lowest terms.
class DenominatorEnumeration final : public Enumeration {
public:
    Natural value(const Endpoint& x) const override { return x.den(); }
    std::vector<Endpoint> level_set(const Natural& n) const override;
    std::string name() const override { return "denominator"; }
};

const Enumeration& default_enumeration();

inline Natural enum_e(const Endpoint& x, const Enumeration& e = default_enumeration()) {
    return e.value(x);
}

inline std::vector<Endpoint> level_set(const Natural& n,
                                       const Enumeration& e = default_enumeration()) {
    return e.level_set(n);
}

}  // namespace atomless
