#pragma once

/**
 * Parser for polynomial expressions in alpha and beta over the rationals.
 *
 * Grammar (whitespace-insensitive, implicit multiplication rejected):
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' natural]
 *   atom   := natural | 'alpha' | 'beta' | '(' expr ')'
 *
 * 'alpha'/'beta' may also be written with the Greek letters. Division
 * requires a constant divisor; exponents must be nonnegative integer
 * literals. Errors carry the byte position of the offending token.
 */

#include <string>

#include "bidiff/bipoly.hpp"

namespace bidiff {

BiPoly parse_expr(const std::string& text);

}  // namespace bidiff
