#pragma once

#include <vector>

#include "lct/bpoly.hpp"

namespace lct {

struct Factor {
    BPoly poly;
    int exponent = 0;
};

/// unit * prod(factor^exponent). Factors are primitive with integer
/// coefficients and a positive leading (graded lex) coefficient, pairwise
/// coprime. `irreducible` is false for squarefree-grade decompositions, whose
/// factors are only known to be squarefree.
struct Factorization {
    Rat unit;
    std::vector<Factor> factors;
    bool irreducible = true;

    BPoly expand() const;
};

/// Scales f to a primitive integer polynomial with positive leading
/// coefficient; returns (scale, normalized) with f == scale * normalized.
std::pair<Rat, BPoly> normalize_primitive(const BPoly& f);

/// Throws both_zero. Result is normalized as in normalize_primitive.
BPoly gcd_bivariate(const BPoly& f, const BPoly& g);

/// Exact quotient; throws divisor_zero or not_divisible.
BPoly divide_exact(const BPoly& f, const BPoly& g);

/// Yun-style squarefree decomposition (squarefree-grade). Throws zero_polynomial.
Factorization squarefree_decomposition(const BPoly& f);

/// Irreducible factorization of a binary form over Q. Throws zero_polynomial.
Factorization factor_binary_form(const BinaryForm& form);

}  // namespace lct
