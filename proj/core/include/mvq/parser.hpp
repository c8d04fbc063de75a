#ifndef MVQ_PARSER_HPP
#define MVQ_PARSER_HPP

#include <string_view>

#include "mvq/term.hpp"

namespace mvq {

/// Term grammar (whitespace insignificant, '+' left-associative, '~' and
/// scalar multiplication binding tighter than '+'):
///
///   term   := term "+" factor | factor
///   factor := NAT "*" factor | "~" factor | atom
///   atom   := "0" | "1" | VAR | "(" term ")"
///   VAR    := "x" NAT
///
/// Quasiequations:
///
///   qe     := [eq ("&" eq)*] "=>" (eq | vatom)
///   eq     := term "=" term
///   vatom  := "V[" NAT ("," NAT)* "](" VAR ")"
///
/// Throws parse_error with a byte position; a bare natural other than 0 or 1
/// is rejected as an unbound constant.
Term parse_term(std::string_view text);
Quasiequation parse_quasiequation(std::string_view text);

}  // namespace mvq

#endif  // MVQ_PARSER_HPP
