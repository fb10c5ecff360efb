#ifndef BISPEC_PARSE_HPP
#define BISPEC_PARSE_HPP

#include <string>
#include <string_view>

#include "bispec/poly.hpp"

namespace bispec {

/// Parses a polynomial in x with exact rational coefficients.
///
/// Grammar (whitespace is ignored between tokens):
///
///     expr    := signed (('+' | '-') signed)*
///     signed  := '-' signed | product
///     product := power ('*' power)*
///     power   := primary ('^' INT)?
///     primary := NUMBER | 'x' | '(' expr ')'
///     NUMBER  := INT ('/' INT)?
///
/// so '^' binds tighter than '*', which binds tighter than unary '-', which
/// binds tighter than binary '+'/'-'. Throws ParseError carrying the byte
/// offset and the set of tokens that would have been accepted there.
Poly parse_poly(std::string_view text);

/// Canonical rendering in descending powers with no zero terms and no spaces,
/// e.g. "-12*x^5+144*x^4-x+476"; "0" for the zero polynomial. Always accepted
/// by parse_poly.
std::string render_poly(const Poly& p);

}  // namespace bispec

#endif
