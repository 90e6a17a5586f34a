#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "atomless/endpoint.hpp"
#include "atomless/good_set.hpp"

namespace atomless {

/// Malformed textual input. `position()` is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// "p/q", or a bare integer ("0", "1"). Non-reduced fractions are reduced.
Endpoint parse_endpoint(std::string_view text);

/// Grammar: "∅" | interval ("+" interval)*, interval = "[" rational "," rational ")".
/// Whitespace between tokens is ignored. The interval list need not be
/// canonical; the result is normalized.
GoodSet parse_good_set(std::string_view text);

}  // namespace atomless
