#include "lct/bpoly.hpp"

#include <algorithm>
#include <vector>

#include "lct/error.hpp"

namespace lct {

BPoly::BPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BPoly::BPoly(std::initializer_list<std::pair<const Monomial, Rat>> terms) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

BPoly BPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BPoly BPoly::monomial(const Rat& c, int i, int j) {
    BPoly p;
    p.add_term({i, j}, c);
    return p;
}

bool BPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat BPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

ExtInt BPoly::degree() const {
    if (is_zero()) return ExtInt::minus_infinity();
    return terms_.begin()->first.degree();
}

ExtInt BPoly::degree_x() const {
    if (is_zero()) return ExtInt::minus_infinity();
    int d = 0;
    for (const auto& kv : terms_) d = std::max(d, kv.first.i);
    return d;
}

ExtInt BPoly::degree_y() const {
    if (is_zero()) return ExtInt::minus_infinity();
    int d = 0;
    for (const auto& kv : terms_) d = std::max(d, kv.first.j);
    return d;
}

const std::pair<const Monomial, Rat>& BPoly::leading_term() const {
    if (is_zero()) throw Error(ErrorCode::zero_polynomial, "leading term of the zero polynomial");
    return *terms_.begin();
}

Rat BPoly::eval(const Rat& x, const Rat& y) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < m.i; ++k) t *= x;
        for (int k = 0; k < m.j; ++k) t *= y;
        sum += t;
    }
    return sum;
}

void BPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BPoly& BPoly::operator+=(const BPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BPoly& BPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

void BPoly::add_scaled(const BPoly& o, const Rat& c, int i, int j) {
    if (c == 0) return;
    for (const auto& [m, v] : o.terms_) add_term({m.i + i, m.j + j}, v * c);
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

BPoly BPoly::operator-() const {
    BPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

BPoly BPoly::pow(unsigned e) const {
    BPoly result = constant(1);
    BPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

BPoly BPoly::diff_x() const {
    BPoly r;
    for (const auto& [m, c] : terms_)
        if (m.i > 0) r.add_term({m.i - 1, m.j}, c * m.i);
    return r;
}

BPoly BPoly::diff_y() const {
    BPoly r;
    for (const auto& [m, c] : terms_)
        if (m.j > 0) r.add_term({m.i, m.j - 1}, c * m.j);
    return r;
}

BPoly BPoly::divide_monomial(int i, int j) const {
    BPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.i < i || m.j < j) throw Error(ErrorCode::not_divisible, "monomial division is not exact");
        r.terms_.emplace(Monomial{m.i - i, m.j - j}, c);
    }
    return r;
}

BinaryForm::BinaryForm(BPoly p, int n) : poly_(std::move(p)), n_(n) {
    for (const auto& kv : poly_.terms())
        if (kv.first.degree() != n)
            throw Error(ErrorCode::invalid_argument, "binary form is not homogeneous of degree " + std::to_string(n));
}

Matrix2 Matrix2::inverse() const {
    Rat dt = det();
    if (dt == 0) throw Error(ErrorCode::singular_matrix, "matrix is singular");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

BinaryForm homogeneous_part(const BPoly& f, int k) {
    BPoly::Terms t;
    for (const auto& [m, c] : f.terms())
        if (m.degree() == k) t.emplace(m, c);
    return BinaryForm(BPoly(std::move(t)), k);
}

ExtInt multiplicity_at_origin(const BPoly& f) {
    if (f.is_zero()) return ExtInt::infinity();
    // Lowest degree sits at the end of the graded order.
    return f.terms().rbegin()->first.degree();
}

WeightedOrder weighted_order(const BPoly& f, const Weights& w) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "weighted order of the zero polynomial");
    if (w.wx <= 0 || w.wy <= 0) throw Error(ErrorCode::invalid_argument, "weights must be positive");
    Rat best;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat wt = w.wx * m.i + w.wy * m.j;
        if (first || wt < best) best = wt;
        first = false;
    }
    BPoly::Terms lead;
    for (const auto& [m, c] : f.terms())
        if (w.wx * m.i + w.wy * m.j == best) lead.emplace(m, c);
    return {best, BPoly(std::move(lead))};
}

BPoly compose(const BPoly& f, const BPoly& X, const BPoly& Y) {
    if (f.is_zero()) return {};
    int dx = static_cast<int>(f.degree_x().value());
    int dy = static_cast<int>(f.degree_y().value());
    std::vector<BPoly> xp{BPoly::constant(1)}, yp{BPoly::constant(1)};
    for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * X);
    for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * Y);
    BPoly r;
    for (const auto& [m, c] : f.terms()) r.add_scaled(xp[m.i] * yp[m.j], c);
    return r;
}

BPoly translate_affine(const BPoly& f, const Point& p) {
    return compose(f, BPoly::x() + BPoly::constant(p.x), BPoly::y() + BPoly::constant(p.y));
}

BPoly linear_change(const BPoly& f, const Matrix2& m) {
    if (m.det() == 0) throw Error(ErrorCode::singular_matrix, "linear change with zero determinant");
    BPoly X = m.a * BPoly::x() + m.b * BPoly::y();
    BPoly Y = m.c * BPoly::x() + m.d * BPoly::y();
    return compose(f, X, Y);
}

}  // namespace lct
