#include "atomless/text.hpp"

#include <cctype>
#include <vector>

namespace atomless {

namespace {

constexpr std::string_view kEmptySymbol = "∅";

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    Natural digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected digits");
        }
        return Natural(std::string(text_.substr(start, pos_ - start)));
    }

    Endpoint rational() {
        skip_space();
        const std::size_t start = pos_;
        Natural num = digits();
        Natural den = 1;
        if (accept('/')) {
            den = digits();
        }
        if (den == 0) {
            throw ParseError("zero denominator", start);
        }
        if (num > den) {
            throw ParseError("rational outside [0,1]", start);
        }
        return Endpoint(num, den);
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Endpoint parse_endpoint(std::string_view text) {
    Cursor cur(text);
    Endpoint x = cur.rational();
    if (!cur.at_end()) {
        cur.fail("trailing input");
    }
    return x;
}

GoodSet parse_good_set(std::string_view text) {
    Cursor cur(text);
    cur.skip_space();
    if (text.substr(cur.position()).starts_with(kEmptySymbol)) {
        Cursor rest(text.substr(cur.position() + kEmptySymbol.size()));
        if (!rest.at_end()) {
            throw ParseError("trailing input", cur.position() + kEmptySymbol.size() + rest.position());
        }
        return GoodSet::empty();
    }

    std::vector<Interval> raw;
    do {
        cur.expect('[');
        const std::size_t start = cur.position();
        Endpoint lower = cur.rational();
        cur.expect(',');
        Endpoint upper = cur.rational();
        cur.expect(')');
        if (!(lower < upper)) {
            throw ParseError("interval lower bound must be below upper bound", start);
        }
        raw.push_back({std::move(lower), std::move(upper)});
    } while (cur.accept('+'));

    if (!cur.at_end()) {
        cur.fail("trailing input");
    }
    return GoodSet::normalize(raw);
}

}  // namespace atomless
