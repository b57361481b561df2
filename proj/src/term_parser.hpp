#pragma once

// Shared reader for the polynomial/monomial text grammar:
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*      '/' only by a nonzero constant
//   factor   := atom ['^' exponent]
//   atom     := INTEGER | VAR | '(' expr ')'
//   exponent := ['-'] INTEGER | '(' ['-'] INTEGER ['/' INTEGER] ')'
//
// Rational exponents are only legal on a single-term base.

#include "wronsk/rational.hpp"

#include <map>
#include <string_view>

namespace wronsk::detail {

/// exponent -> nonzero coefficient
using TermMap = std::map<Rational, Rational>;

TermMap parse_terms(std::string_view text, char variable = 'x');

} // namespace wronsk::detail

#include <string>

namespace wronsk::detail {

/// Appends one signed term to `out` in canonical form; `power` is the
/// rendered variable part ("" for a constant term).
void append_term(std::string &out, const Rational &coeff, const std::string &power);

} // namespace wronsk::detail
