#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ga/multivector.hpp"

namespace ga {

/// Parse failure with the byte offset of the offending input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " at byte " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

/// Parses the e-notation grammar
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := [rational] [blade]          (at least one of the two)
///   rational   := digits ['/' digits]
///   blade      := 'e' digits                  (single-digit indices, n <= 9)
///               | 'e{' index (',' index)* '}' (any n)
/// Indices must be distinct within one blade and lie in [1, n]; unsorted
/// indices are canonicalized ascending with the transposition sign applied.
/// Whitespace is free between tokens. Throws ParseError with a byte offset.
Multivector parse_multivector(std::string_view text, int n);

/// Canonical form: terms in lexicographic blade order, explicit signs,
/// reduced rationals, "0" for zero. Compact blades (e123) up to n = 9,
/// braces (e{1,2,3}) above. parse_multivector inverts this exactly.
std::string format_multivector(const Multivector& b);

/// One blade in the dimension's notation; empty string for the scalar unit.
std::string format_blade(BladeIndex j, int n);

}  // namespace ga
