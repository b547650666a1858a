#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/intpoly.hpp"
#include "intersective/quadcover.hpp"

namespace intersective {

/// Parses either a coefficient list in ascending order ("[1,0,1]", entries
/// may be integers or fractions "p/q") or a human expression in one variable
/// ("x^2+1", "(x^2+x+1)(x^3-2)", "1/2 x^2 - 3"). Returns the exact rational
/// coefficients, ascending, without trailing zeros. Throws InputError.
std::vector<Rational> parse_rational_polynomial(std::string_view text);

/// parse_rational_polynomial, then denominators cleared and content removed:
/// the primitive integer polynomial with the same roots and the sign of the
/// input's leading coefficient. "0" parses to the zero polynomial.
IntPoly parse_polynomial(std::string_view text);

/// "a,b,c" with integer entries.
QuadForm parse_form(std::string_view text);

/// One form per line; blank lines and lines starting with '#' are skipped.
std::vector<QuadForm> parse_forms(std::istream& in);
std::vector<QuadForm> read_forms_file(const std::string& path);

}  // namespace intersective
