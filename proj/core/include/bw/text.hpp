#pragma once

// Text grammar for polynomials:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'|'/'] power)*        juxtaposition means '*'
//   power  := atom ['^' integer]
//   atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
//
// Division is exact rational-function division. A polynomial context
// accepts only constant denominators; localized contexts accept powers of a
// fixed polynomial (see curve.hpp). There are no floating-point literals.

#include <string>
#include <string_view>

#include "bw/poly.hpp"

namespace bw {

/// numerator / denominator, denominator nonzero. Not reduced.
struct Fraction {
  Poly numerator;
  Poly denominator;
};

/// Throws Error(ParseError) on malformed input.
Fraction parse_fraction(std::string_view text);

/// Throws Error(ParseError) on malformed input or a non-constant denominator.
Poly parse_poly(std::string_view text, MonomialOrder order = MonomialOrder::Lex);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rat& r);

/// Terms in decreasing order, e.g. "3/2*x^2*y - x + 1". Zero prints as "0".
/// The output re-parses to an equal polynomial.
std::string to_string(const Poly& p);

}  // namespace bw
