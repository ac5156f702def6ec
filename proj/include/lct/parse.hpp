#pragma once

#include <string>
#include <string_view>

#include "lct/bpoly.hpp"

namespace lct {

/// Parses a polynomial in x and y.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := base ('^' nonneg-int)?
///   base     := 'x' | 'y' | int | '(' expr ')'
///
/// Rational literals "p/q" are the division of two integer literals. Division
/// is only permitted by nonzero constants. Juxtaposition ("2x") is rejected.
/// Throws ParseError with code syntax_error or non_polynomial.
BPoly parse_poly(std::string_view text);

/// Parses a homogeneous form in x, y, z and dehomogenizes it by setting the
/// `chart` variable to 1. The two remaining variables, in alphabetical order,
/// become x and y.
BPoly parse_projective(std::string_view text, char chart);

/// Canonical text in graded lexicographic order, e.g. "x^3 - 3/2*x*y^2 + 1".
/// parse_poly(render(f)) == f.
std::string render(const BPoly& f);

}  // namespace lct
