#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "lct/rat.hpp"

namespace lct {

/// Exponent pair of x^i y^j.
struct Monomial {
    int i = 0;
    int j = 0;

    constexpr int degree() const { return i + j; }
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first: higher total degree, then
/// higher power of x. This is the rendering order.
struct GrlexGreater {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.i > b.i;
    }
};

struct Point {
    Rat x;
    Rat y;
};

/// Sparse bivariate polynomial over the rationals. No stored coefficient is
/// ever zero.
class BPoly {
public:
    using Terms = std::map<Monomial, Rat, GrlexGreater>;

    BPoly() = default;
    explicit BPoly(Terms terms);
    BPoly(std::initializer_list<std::pair<const Monomial, Rat>> terms);

    static BPoly constant(const Rat& c);
    static BPoly monomial(const Rat& c, int i, int j);
    static BPoly x() { return monomial(1, 1, 0); }
    static BPoly y() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    Rat coeff(int i, int j) const;
    Rat constant_term() const { return coeff(0, 0); }

    /// Total degree; minus infinity for the zero polynomial.
    ExtInt degree() const;
    ExtInt degree_x() const;
    ExtInt degree_y() const;

    /// Greatest term in graded lexicographic order. Requires a nonzero poly.
    const std::pair<const Monomial, Rat>& leading_term() const;

    Rat eval(const Rat& x, const Rat& y) const;

    BPoly& operator+=(const BPoly& o);
    BPoly& operator-=(const BPoly& o);
    BPoly& operator*=(const Rat& c);
    /// Adds c * x^i * y^j * o.
    void add_scaled(const BPoly& o, const Rat& c, int i = 0, int j = 0);

    friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
    friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    friend BPoly operator*(BPoly a, const Rat& c) { return a *= c; }
    friend BPoly operator*(const Rat& c, BPoly a) { return a *= c; }
    BPoly operator-() const;
    friend bool operator==(const BPoly&, const BPoly&) = default;

    BPoly pow(unsigned e) const;
    BPoly diff_x() const;
    BPoly diff_y() const;

    /// Exact division by x^i y^j; every term must be divisible.
    BPoly divide_monomial(int i, int j) const;

private:
    void add_term(const Monomial& m, const Rat& c);
    Terms terms_;
};

/// Homogeneous bivariate polynomial of a fixed degree n (possibly zero).
class BinaryForm {
public:
    /// Throws invalid_argument if some term of `p` has degree other than n.
    BinaryForm(BPoly p, int n);

    const BPoly& poly() const { return poly_; }
    int degree() const { return n_; }
    bool is_zero() const { return poly_.is_zero(); }

private:
    BPoly poly_;
    int n_;
};

struct Weights {
    Rat wx;
    Rat wy;
};

struct WeightedOrder {
    Rat weight;
    BPoly leading_part;
};

/// Row-major 2x2 matrix acting on column vectors (x, y).
struct Matrix2 {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
    Matrix2 inverse() const;
    static Matrix2 identity() { return {1, 0, 0, 1}; }
};

BinaryForm homogeneous_part(const BPoly& f, int k);
ExtInt multiplicity_at_origin(const BPoly& f);
/// Throws zero_polynomial for f == 0; weights must be positive.
WeightedOrder weighted_order(const BPoly& f, const Weights& w);

/// f(X(x, y), Y(x, y)).
BPoly compose(const BPoly& f, const BPoly& X, const BPoly& Y);
/// f(x + p.x, y + p.y).
BPoly translate_affine(const BPoly& f, const Point& p);
/// f(a x + b y, c x + d y); throws singular_matrix when det(M) == 0.
BPoly linear_change(const BPoly& f, const Matrix2& m);

}  // namespace lct
