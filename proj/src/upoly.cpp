#include "lct/upoly.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "lct/error.hpp"

namespace lct {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExtInt UPoly::degree() const {
    if (c_.empty()) return ExtInt::minus_infinity();
    return static_cast<long>(c_.size()) - 1;
}

int UPoly::deg() const {
    if (c_.empty()) throw Error(ErrorCode::zero_polynomial, "degree index of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& UPoly::lead() const {
    if (c_.empty()) throw Error(ErrorCode::zero_polynomial, "leading coefficient of the zero polynomial");
    return c_.back();
}

Rat UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rat UPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const Rat& c) {
    std::vector<Rat> r = a.c_;
    for (auto& v : r) v *= c;
    return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
    std::vector<Rat> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rat inv = 1 / lead();
    return *this * inv;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::divisor_zero, "univariate division by zero");
    std::vector<Rat> rem = a.coeffs();
    int db = b.deg();
    if (static_cast<int>(rem.size()) - 1 < db) return {UPoly(), a};
    std::vector<Rat> q(rem.size() - db, Rat(0));
    Rat inv = 1 / b.lead();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rat coef = rem[k] * inv;
        q[k - db] = coef;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= coef * b.coeffs()[i];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<Rat, ZPoly> primitive_part(const UPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "primitive part of the zero polynomial");
    BigInt den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    BigInt g = 0;
    for (const auto& c : f.coeffs()) {
        BigInt v = c.get_num() * (den / c.get_den());
        z.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    Rat content(g, den);
    content.canonicalize();
    return {content, z};
}

UPoly to_upoly(const ZPoly& f) {
    std::vector<Rat> v;
    v.reserve(f.size());
    for (const auto& c : f) v.emplace_back(c);
    return UPoly(std::move(v));
}

std::vector<std::pair<UPoly, int>> yun_decomposition(const UPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    if (f.deg() == 0) return out;
    UPoly fp = f.derivative();
    UPoly a0 = gcd(f, fp);
    UPoly b = divmod(f, a0).first;
    UPoly c = divmod(fp, a0).first;
    UPoly d = c - b.derivative();
    for (int i = 1; b.deg() > 0; ++i) {
        UPoly a = gcd(b, d);
        if (a.deg() > 0) out.emplace_back(a, i);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

namespace {

// Arithmetic in (Z/p)[t] for a (large) prime p. Coefficients live in [0, p).
using MPoly = std::vector<BigInt>;

class ModP {
public:
    explicit ModP(BigInt p) : p_(std::move(p)), rng_(gmp_randinit_default) { rng_.seed(0x5eed); }

    const BigInt& p() const { return p_; }

    BigInt reduce(const BigInt& v) const {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
        return r;
    }

    BigInt inverse(const BigInt& v) const {
        BigInt r;
        if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error(ErrorCode::internal, "modular inverse does not exist");
        return r;
    }

    static void trim(MPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    MPoly from(const ZPoly& f) const {
        MPoly r;
        for (const auto& c : f) r.push_back(reduce(c));
        trim(r);
        return r;
    }

    MPoly sub(const MPoly& a, const MPoly& b) const {
        MPoly r(std::max(a.size(), b.size()), BigInt(0));
        for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
        for (std::size_t k = 0; k < b.size(); ++k) r[k] = reduce(r[k] - b[k]);
        trim(r);
        return r;
    }

    MPoly mul(const MPoly& a, const MPoly& b) const {
        if (a.empty() || b.empty()) return {};
        MPoly r(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& v : r) v = reduce(v);
        trim(r);
        return r;
    }

    std::pair<MPoly, MPoly> divmod(const MPoly& a, const MPoly& b) const {
        MPoly rem = a;
        if (rem.size() < b.size()) return {{}, rem};
        std::size_t db = b.size() - 1;
        MPoly q(rem.size() - db, BigInt(0));
        BigInt inv = inverse(b.back());
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k] == 0) continue;
            BigInt coef = reduce(rem[k] * inv);
            q[k - db] = coef;
            for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = reduce(rem[k - db + i] - coef * b[i]);
        }
        trim(rem);
        trim(q);
        return {q, rem};
    }

    MPoly rem(const MPoly& a, const MPoly& b) const { return divmod(a, b).second; }

    MPoly monic(const MPoly& a) const {
        if (a.empty()) return a;
        BigInt inv = inverse(a.back());
        MPoly r;
        for (const auto& c : a) r.push_back(reduce(c * inv));
        return r;
    }

    MPoly gcd(MPoly a, MPoly b) const {
        while (!b.empty()) {
            MPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    MPoly powmod(MPoly base, BigInt e, const MPoly& m) const {
        MPoly result{BigInt(1)};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return result;
    }

    MPoly derivative(const MPoly& a) const {
        MPoly r;
        for (std::size_t k = 1; k < a.size(); ++k) r.push_back(reduce(a[k] * static_cast<unsigned long>(k)));
        trim(r);
        return r;
    }

    MPoly random_below(std::size_t degree_bound) {
        MPoly r;
        for (std::size_t k = 0; k < degree_bound; ++k) r.push_back(rng_.get_z_range(p_));
        trim(r);
        return r;
    }

    /// Symmetric representative in (-p/2, p/2].
    BigInt symmetric(const BigInt& v) const {
        BigInt r = reduce(v);
        if (2 * r > p_) r -= p_;
        return r;
    }

private:
    BigInt p_;
    gmp_randclass rng_;
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MPoly, int>> distinct_degree(ModP& ring, MPoly f) {
    std::vector<std::pair<MPoly, int>> out;
    const MPoly x{BigInt(0), BigInt(1)};
    MPoly h = x;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = ring.powmod(h, ring.p(), f);
        MPoly g = ring.gcd(ring.sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = ring.divmod(f, g).first;
            h = ring.rem(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(ring.monic(f), static_cast<int>(f.size()) - 1);
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p).
void equal_degree(ModP& ring, const MPoly& g, int d, std::vector<MPoly>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    BigInt e;
    mpz_pow_ui(e.get_mpz_t(), ring.p().get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        MPoly a = ring.random_below(static_cast<std::size_t>(n));
        if (a.size() < 2) continue;
        MPoly b = ring.sub(ring.powmod(a, e, g), MPoly{BigInt(1)});
        MPoly g1 = ring.gcd(b, g);
        if (g1.size() > 1 && g1.size() < g.size()) {
            equal_degree(ring, g1, d, out);
            equal_degree(ring, ring.divmod(g, g1).first, d, out);
            return;
        }
    }
}

ZPoly zprimitive(ZPoly z) {
    BigInt g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return z;
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

// Exact quotient f / g over Z, or empty when g does not divide f.
std::optional<ZPoly> zdivide(const ZPoly& f, const ZPoly& g) {
    auto [q, r] = divmod(to_upoly(f), to_upoly(g));
    if (!r.is_zero()) return std::nullopt;
    ZPoly out;
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
    if (f.size() < 2) throw Error(ErrorCode::internal, "factor_squarefree_primitive needs positive degree");
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};

    // Coefficient bound for lc(f) * g over all factors g of f (Mignotte).
    BigInt max_abs = 0;
    for (const auto& c : f) max_abs = std::max(max_abs, BigInt(abs(c)));
    BigInt root = sqrt(BigInt(static_cast<unsigned long>(n + 1))) + 1;
    BigInt bound = root * (BigInt(1) << static_cast<mp_bitcnt_t>(n)) * max_abs * abs(f.back());

    BigInt p;
    BigInt start = 2 * bound + 1;
    mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
    for (;;) {
        ModP probe(p);
        MPoly fm = probe.from(f);
        if (fm.size() == f.size() && probe.gcd(fm, probe.derivative(fm)).size() == 1) break;
        BigInt next;
        mpz_nextprime(next.get_mpz_t(), p.get_mpz_t());
        p = next;
    }

    ModP ring(p);
    MPoly fm = ring.monic(ring.from(f));
    std::vector<MPoly> modular;
    for (auto& [g, d] : distinct_degree(ring, fm)) equal_degree(ring, g, d, modular);

    if (modular.size() == 1) return {f};

    std::vector<ZPoly> found;
    ZPoly rest = f;
    std::vector<std::size_t> live(modular.size());
    for (std::size_t k = 0; k < live.size(); ++k) live[k] = k;

    auto lift = [&](const std::vector<std::size_t>& idx, const BigInt& lc) {
        MPoly prod{ring.reduce(lc)};
        for (auto k : idx) prod = ring.mul(prod, modular[k]);
        ZPoly z;
        for (const auto& c : prod) z.push_back(ring.symmetric(c));
        while (!z.empty() && z.back() == 0) z.pop_back();
        return zprimitive(z);
    };

    for (std::size_t s = 1; 2 * s <= live.size();) {
        bool split = false;
        // Enumerate s-subsets of `live` in lexicographic order.
        std::vector<std::size_t> pick(s);
        for (std::size_t k = 0; k < s; ++k) pick[k] = k;
        for (;;) {
            std::vector<std::size_t> idx;
            for (auto k : pick) idx.push_back(live[k]);
            ZPoly cand = lift(idx, rest.back());
            if (cand.size() > 1) {
                if (auto q = zdivide(rest, cand)) {
                    found.push_back(cand);
                    rest = *q;
                    std::vector<std::size_t> keep;
                    for (std::size_t k = 0; k < live.size(); ++k)
                        if (std::find(pick.begin(), pick.end(), k) == pick.end()) keep.push_back(live[k]);
                    live = std::move(keep);
                    split = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == live.size() - s + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!split) ++s;
    }
    if (rest.size() > 1) found.push_back(zprimitive(rest));
    return found;
}

UFactorization factor_univariate(const UPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "factorization of the zero polynomial");
    UFactorization out;
    Rat unit = f.lead();
    for (const auto& [part, e] : yun_decomposition(f)) {
        ZPoly prim = primitive_part(part).second;
        for (auto& g : factor_squarefree_primitive(prim)) {
            for (int k = 0; k < e; ++k) unit /= Rat(g.back());
            out.factors.push_back({std::move(g), e});
        }
    }
    out.unit = unit;
    return out;
}

std::string render_univariate(const ZPoly& f, char var) {
    std::string s;
    for (std::size_t k = f.size(); k-- > 0;) {
        if (f[k] == 0) continue;
        BigInt c = f[k];
        bool neg = c < 0;
        if (neg) c = -c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0 || c != 1) {
            s += c.get_str();
            if (k > 0) s += "*";
        }
        if (k >= 1) s += var;
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace lct
