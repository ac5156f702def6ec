#include "lct/highmult.hpp"

#include <algorithm>

#include "lct/error.hpp"
#include "lct/factor.hpp"
#include "lct/localinv.hpp"
#include "lct/parse.hpp"

namespace lct {

namespace {

Rat component_value(int k, int d) { return make_rat(2L * k + 1, static_cast<long>(k) * d + 1); }
Rat non_component_value(int k, int d) { return make_rat(2L * k + 1, static_cast<long>(k) * d); }

int component_k_min(int d) { return (d - 1) / 2; }
int non_component_k_min(int d) { return (d + 1) / 2; }

void require_degree(int d) {
    if (d < 3) throw Error(ErrorCode::degree_too_small, "degree must be at least 3, got " + std::to_string(d));
}

// Number of times `line` divides the binary form.
int line_exponent(BPoly form, const BPoly& line) {
    int e = 0;
    while (!form.is_zero()) {
        try {
            form = divide_exact(form, line);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::not_divisible) throw;
            break;
        }
        ++e;
    }
    return e;
}

}  // namespace

HighMultAnalysis analyze_high_mult(const BPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "analyze_high_mult: zero polynomial");
    const int d = static_cast<int>(f.degree().value());
    require_degree(d);
    const ExtInt mult = multiplicity_at_origin(f);
    if (mult != ExtInt(d - 1))
        throw Error(ErrorCode::wrong_multiplicity,
                    "multiplicity at the origin is " + mult.str() + ", expected " + std::to_string(d - 1));
    if (!is_square_free(f)) throw Error(ErrorCode::not_square_free, "curve is not reduced: " + render(f));

    HighMultAnalysis out;
    out.d = d;
    Factorization cone = factor_binary_form(homogeneous_part(f, d - 1));
    const Factor* special = nullptr;
    for (const auto& fac : cone.factors) {
        if (2 * fac.exponent <= d - 1) continue;
        if (special != nullptr) throw Error(ErrorCode::internal, "two tangent lines carry more than half the cone");
        if (fac.poly.degree() != ExtInt(1))
            throw Error(ErrorCode::internal, "dominant tangent factor is not linear: " + render(fac.poly));
        special = &fac;
    }
    if (special == nullptr) {
        out.lct = make_rat(2, d - 1);
        return out;
    }

    out.has_special_q = true;
    out.m = special->exponent;
    out.line = special->poly;
    try {
        BPoly rest = divide_exact(f, special->poly);
        out.line_is_component = true;
        out.k_q = line_exponent(homogeneous_part(rest, d - 2).poly(), special->poly);
        if (out.k_q != out.m - 1) throw Error(ErrorCode::internal, "k_Q differs from m - 1 for a line component");
        out.l_q = component_value(out.k_q, d);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::not_divisible) throw;
        out.line_is_component = false;
        out.k_q = out.m;
        out.l_q = non_component_value(out.k_q, d);
    }
    out.lct = *out.l_q;
    return out;
}

std::vector<Rat> lambda_set(int d) {
    require_degree(d);
    std::vector<Rat> v{make_rat(2, d - 1)};
    for (int k = component_k_min(d); k <= d - 2; ++k) v.push_back(component_value(k, d));
    for (int k = non_component_k_min(d); k <= d - 1; ++k) v.push_back(non_component_value(k, d));
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw Error(ErrorCode::internal, "threshold families overlap for d = " + std::to_string(d));
    return v;
}

BPoly construct_witness(int d, const Rat& target) {
    require_degree(d);
    const BPoly x = BPoly::x(), y = BPoly::y();

    // Base curve and the degree of the slot where padding terms may go.
    BPoly base;
    int pad_degree = 0;
    bool pad_inside_cofactor = false;
    bool found = false;
    if (target == make_rat(2, d - 1)) {
        base = x * y;
        for (int i = 1; i <= d - 3; ++i) base = base * (x - Rat(i) * y);
        base += x.pow(d);
        pad_degree = d;
        found = true;
    }
    for (int k = component_k_min(d); !found && k <= d - 2; ++k) {
        if (component_value(k, d) != target) continue;
        base = x.pow(k) * y.pow(d - 2 - k) + y.pow(d - 1);
        pad_degree = d - 1;
        pad_inside_cofactor = true;
        found = true;
    }
    for (int k = non_component_k_min(d); !found && k <= d - 1; ++k) {
        if (non_component_value(k, d) != target) continue;
        base = x.pow(k) * y.pow(d - 1 - k) + y.pow(d);
        pad_degree = d;
        found = true;
    }
    if (!found)
        throw Error(ErrorCode::target_not_realizable,
                    to_string(target) + " is not a threshold at multiplicity " + std::to_string(d - 1) +
                        " points of degree " + std::to_string(d) + " curves");

    // Deterministic padding by terms x^D, x^(D-1) y, ... that leave the
    // tangent cone and the y^D coefficient alone.
    std::vector<BPoly> pads{BPoly()};
    for (int c = 1; c <= 3; ++c)
        for (int j = 0; j < pad_degree; ++j) {
            BPoly p;
            for (int t = 0; t <= j; ++t) p += BPoly::monomial(c + t, pad_degree - t, t);
            pads.push_back(p);
        }
    for (const auto& pad : pads) {
        BPoly f = pad_inside_cofactor ? x * (base + pad) : base + pad;
        if (!is_square_free(f)) continue;
        if (analyze_high_mult(f).lct == target) return f;
    }
    throw Error(ErrorCode::target_not_realizable, "no square-free witness found for " + to_string(target));
}

bool reducibility_hint(const Rat& lct, int d) {
    auto values = lambda_set(d);
    if (!std::binary_search(values.begin(), values.end(), lct))
        throw Error(ErrorCode::not_in_lambda_set, to_string(lct) + " is not in the threshold set for d = " + std::to_string(d));
    for (int k = component_k_min(d); k <= d - 2; ++k)
        if (component_value(k, d) == lct) return true;
    return false;
}

}  // namespace lct
