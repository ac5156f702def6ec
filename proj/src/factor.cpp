#include "lct/factor.hpp"

#include "lct/error.hpp"
#include "lct/upoly.hpp"

namespace lct {

namespace {

// f as a polynomial in y with coefficients in Q[x]: rec[j] multiplies y^j.
using RecPoly = std::vector<UPoly>;

RecPoly to_rec(const BPoly& f) {
    if (f.is_zero()) return {};
    std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(f.degree_y().value()) + 1);
    for (const auto& [m, c] : f.terms()) {
        auto& v = raw[m.j];
        if (static_cast<int>(v.size()) <= m.i) v.resize(static_cast<std::size_t>(m.i) + 1, Rat(0));
        v[m.i] = c;
    }
    RecPoly r;
    for (auto& v : raw) r.emplace_back(std::move(v));
    return r;
}

BPoly from_rec(const RecPoly& r) {
    BPoly::Terms t;
    for (std::size_t j = 0; j < r.size(); ++j)
        for (std::size_t i = 0; i < r[j].coeffs().size(); ++i)
            if (r[j].coeffs()[i] != 0) t.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, r[j].coeffs()[i]);
    return BPoly(std::move(t));
}

BPoly from_upoly_x(const UPoly& u) {
    BPoly::Terms t;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
        if (u.coeffs()[i] != 0) t.emplace(Monomial{static_cast<int>(i), 0}, u.coeffs()[i]);
    return BPoly(std::move(t));
}

void trim(RecPoly& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

UPoly content_y(const RecPoly& r) {
    UPoly g;
    for (const auto& c : r) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.deg() == 0) break;
    }
    return g;
}

RecPoly primitive_y(const RecPoly& r) {
    UPoly c = content_y(r);
    RecPoly out;
    for (const auto& coef : r) out.push_back(divmod(coef, c).first);
    return out;
}

// Pseudo-remainder of a by b as polynomials in y.
RecPoly prem_y(RecPoly a, const RecPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        UPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (int k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - la * b[k];
        trim(a);
    }
    return a;
}

}  // namespace

BPoly Factorization::expand() const {
    BPoly r = BPoly::constant(unit);
    for (const auto& f : factors) r = r * f.poly.pow(static_cast<unsigned>(f.exponent));
    return r;
}

std::pair<Rat, BPoly> normalize_primitive(const BPoly& f) {
    if (f.is_zero()) return {Rat(1), f};
    BigInt den = 1, num = 0;
    for (const auto& kv : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), kv.second.get_den_mpz_t());
    for (const auto& kv : f.terms()) {
        BigInt v = kv.second.get_num() * (den / kv.second.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale(num, den);
    scale.canonicalize();
    if (f.leading_term().second < 0) scale = -scale;
    return {scale, f * Rat(1 / scale)};
}

BPoly gcd_bivariate(const BPoly& f, const BPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::both_zero, "gcd of two zero polynomials");
    if (f.is_zero()) return normalize_primitive(g).second;
    if (g.is_zero()) return normalize_primitive(f).second;

    RecPoly a = to_rec(f), b = to_rec(g);
    UPoly content = gcd(content_y(a), content_y(b));
    RecPoly pa = primitive_y(a), pb = primitive_y(b);

    RecPoly prim{UPoly::constant(1)};
    if (pa.size() > 1 && pb.size() > 1) {
        if (pa.size() < pb.size()) std::swap(pa, pb);
        for (;;) {
            RecPoly r = prem_y(pa, pb);
            if (r.empty()) {
                prim = primitive_y(pb);
                break;
            }
            if (r.size() == 1) break;  // nonzero y-free remainder: coprime
            pa = std::move(pb);
            pb = primitive_y(r);
        }
    }
    BPoly out = from_rec(prim) * from_upoly_x(content);
    return normalize_primitive(out).second;
}

BPoly divide_exact(const BPoly& f, const BPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::divisor_zero, "division by the zero polynomial");
    const auto& [gm, gc] = g.leading_term();
    BPoly rem = f, quot;
    while (!rem.is_zero()) {
        const auto [m, c] = rem.leading_term();
        if (m.i < gm.i || m.j < gm.j) throw Error(ErrorCode::not_divisible, "polynomial division is not exact");
        Rat q = c / gc;
        quot.add_scaled(BPoly::constant(1), q, m.i - gm.i, m.j - gm.j);
        rem.add_scaled(g, -q, m.i - gm.i, m.j - gm.j);
    }
    return quot;
}

Factorization squarefree_decomposition(const BPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "squarefree decomposition of zero");
    Factorization out;
    out.irreducible = false;

    RecPoly rec = to_rec(f);
    UPoly content = content_y(rec);
    for (const auto& [part, e] : yun_decomposition(content))
        out.factors.push_back({normalize_primitive(from_upoly_x(part)).second, e});

    BPoly p = from_rec(primitive_y(rec));
    if (p.degree_y().value() > 0) {
        BPoly py = p.diff_y();
        BPoly a0 = gcd_bivariate(p, py);
        BPoly b = divide_exact(p, a0);
        BPoly c = divide_exact(py, a0);
        BPoly d = c - b.diff_y();
        for (int i = 1; b.degree_y().value() > 0; ++i) {
            BPoly a = gcd_bivariate(b, d);
            if (!a.is_constant()) out.factors.push_back({a, i});
            b = divide_exact(b, a);
            c = divide_exact(d, a);
            d = c - b.diff_y();
        }
    }

    Rat unit = f.leading_term().second;
    for (const auto& fac : out.factors)
        for (int k = 0; k < fac.exponent; ++k) unit /= fac.poly.leading_term().second;
    out.unit = unit;
    return out;
}

Factorization factor_binary_form(const BinaryForm& form) {
    if (form.is_zero()) throw Error(ErrorCode::zero_polynomial, "factorization of the zero binary form");
    const int n = form.degree();
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (const auto& [m, c] : form.poly().terms()) coeffs[m.i] = c;
    UPoly dehom(std::move(coeffs));

    UFactorization uf = factor_univariate(dehom);
    Factorization out;
    out.unit = uf.unit;
    for (const auto& [h, e] : uf.factors) {
        const int dh = static_cast<int>(h.size()) - 1;
        BPoly::Terms t;
        for (int i = 0; i <= dh; ++i)
            if (h[i] != 0) t.emplace(Monomial{i, dh - i}, Rat(h[i]));
        out.factors.push_back({BPoly(std::move(t)), e});
    }
    const int at_infinity = n - dehom.deg();
    if (at_infinity > 0) out.factors.push_back({BPoly::y(), at_infinity});
    return out;
}

}  // namespace lct
