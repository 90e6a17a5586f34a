#pragma once

#include <string>
#include <string_view>

#include "atomless/witness.hpp"

namespace atomless {

/// One JSON object, no trailing newline:
/// {"atoms":[...3 good-set strings],"color":n,"convention":"changes"|"runs",
///  "oracle":"whole"|"random:<seed>","log":[{"query":s,"answer":[s,s]},...]}
std::string to_json_line(const WitnessTriple& w);

/// Inverse of to_json_line. Throws std::invalid_argument (or ParseError for a
/// bad good-set string) on malformed input. The atoms are taken as written,
/// not re-sorted, so verify_witness can catch an unsorted file.
WitnessTriple witness_from_json(std::string_view line);

}  // namespace atomless
