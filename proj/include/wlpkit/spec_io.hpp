#pragma once

// Ideal specification documents:
//
//   {"vars": r,
//    "generators": [
//      {"power_of_linear": {"coeffs": [c_1, ..., c_r] | "general", "exp": a}},
//      {"form": {"degree": d, "terms": [[[e_1, ..., e_r], c], ...]}},
//      {"general_form": {"degree": d}}
//    ]}
//
// Coefficients are JSON integers or decimal strings of any length.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wlpkit/ideal_engine.hpp"

namespace wlpkit {

/// Throws SpecParseError carrying the line and column of syntax errors.
IdealSpec parse_spec(std::string_view text);

/// Reads a document from `path`, or from standard input when `path` is "-".
IdealSpec read_spec(const std::string& path);
IdealSpec read_spec(std::istream& in);

nlohmann::ordered_json spec_to_json(const IdealSpec& spec);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::ordered_json bigint_json(const BigInt& v);

}  // namespace wlpkit
