#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lct/rat.hpp"

namespace lct {

/// Dense univariate polynomial over the rationals; coeffs()[k] multiplies t^k.
/// Trailing zero coefficients are never stored.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);

    static UPoly constant(const Rat& c) { return UPoly({c}); }
    static UPoly monomial(const Rat& c, int k);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree of a nonzero polynomial; minus infinity for zero.
    ExtInt degree() const;
    /// Degree as an index; requires a nonzero polynomial.
    int deg() const;
    const Rat& lead() const;
    Rat coeff(int k) const;
    Rat eval(const Rat& t) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Rat& c);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    UPoly derivative() const;
    UPoly monic() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder; throws divisor_zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

/// Integer polynomial used by the factorizer.
using ZPoly = std::vector<BigInt>;

/// Splits f into rational content and a primitive integer polynomial with a
/// positive leading coefficient. f must be nonzero.
std::pair<Rat, ZPoly> primitive_part(const UPoly& f);
UPoly to_upoly(const ZPoly& f);

struct UFactor {
    ZPoly poly;  // irreducible over Q, primitive, positive leading coefficient
    int exponent = 0;
};

struct UFactorization {
    Rat unit;
    std::vector<UFactor> factors;
};

/// Squarefree decomposition over Q (Yun): pairs (squarefree part, exponent)
/// with strictly increasing exponents; parts are monic.
std::vector<std::pair<UPoly, int>> yun_decomposition(const UPoly& f);

/// Irreducible factors of a squarefree primitive integer polynomial of
/// positive degree (big-prime Cantor-Zassenhaus with subset recombination).
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f);

/// Complete factorization over Q. Throws zero_polynomial.
UFactorization factor_univariate(const UPoly& f);

std::string render_univariate(const ZPoly& f, char var = 't');

}  // namespace lct
