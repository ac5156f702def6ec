#include "lct/localinv.hpp"

#include <algorithm>
#include <functional>

#include "lct/error.hpp"
#include "lct/factor.hpp"

namespace lct {

namespace {

void require_nonzero(const BPoly& f, const char* what) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, std::string(what) + ": zero polynomial");
}

void require_origin(const BPoly& f, const char* what) {
    require_nonzero(f, what);
    if (f.constant_term() != 0)
        throw Error(ErrorCode::not_through_origin, std::string(what) + ": curve does not pass through the origin");
}

// Restriction to y = 0: highest and lowest power of x with its coefficient.
struct AxisTrace {
    bool zero = true;
    int top = 0;
    int bottom = 0;
    Rat top_coeff;
};

AxisTrace trace_on_x_axis(const BPoly& f) {
    AxisTrace t;
    for (const auto& [m, c] : f.terms()) {
        if (m.j != 0) continue;
        if (t.zero) {
            t = {false, m.i, m.i, c};
        } else {
            if (m.i > t.top) {
                t.top = m.i;
                t.top_coeff = c;
            }
            t.bottom = std::min(t.bottom, m.i);
        }
    }
    return t;
}

}  // namespace

ExtInt intersection_multiplicity_origin(const BPoly& f, const BPoly& g) {
    require_nonzero(f, "intersection multiplicity");
    require_nonzero(g, "intersection multiplicity");
    if (f.constant_term() != 0 || g.constant_term() != 0) return 0;
    if (gcd_bivariate(f, g).constant_term() == 0) return ExtInt::infinity();

    // Fulton: I(F, G) = I(F, G + A F); I(y H, G) = I(y, G) + I(H, G);
    // I(y, G) = ord_x G(x, 0).
    BPoly F = f, G = g;
    long acc = 0;
    for (;;) {
        if (F.constant_term() != 0 || G.constant_term() != 0) return acc;
        AxisTrace tf = trace_on_x_axis(F), tg = trace_on_x_axis(G);
        if (tf.zero && tg.zero) return ExtInt::infinity();
        int r = tf.zero ? 0 : tf.top;
        int s = tg.zero ? 0 : tg.top;
        if (r > s) {
            std::swap(F, G);
            std::swap(tf, tg);
            std::swap(r, s);
        }
        if (tf.zero) {
            acc += tg.bottom;
            F = F.divide_monomial(0, 1);
            continue;
        }
        G.add_scaled(F, -(tg.top_coeff / tf.top_coeff), s - r, 0);
    }
}

ExtInt milnor_number_origin(const BPoly& f) {
    require_origin(f, "Milnor number");
    BPoly fx = f.diff_x(), fy = f.diff_y();
    if (fx.constant_term() != 0 || fy.constant_term() != 0) return 0;
    if (fx.is_zero() || fy.is_zero()) return ExtInt::infinity();
    return intersection_multiplicity_origin(fx, fy);
}

TangentConePattern tangent_cone_pattern(const BPoly& f) {
    require_origin(f, "tangent cone pattern");
    int mult = static_cast<int>(multiplicity_at_origin(f).value());
    Factorization sq = squarefree_decomposition(homogeneous_part(f, mult).poly());
    TangentConePattern p;
    for (const auto& fac : sq.factors)
        for (long k = 0; k < fac.poly.degree().value(); ++k) p.entries.push_back(fac.exponent);
    std::sort(p.entries.begin(), p.entries.end(), std::greater<>());
    return p;
}

bool is_square_free(const BPoly& f) {
    require_nonzero(f, "square-free test");
    if (f.is_constant()) return true;
    return gcd_bivariate(gcd_bivariate(f, f.diff_x()), f.diff_y()).is_constant();
}

WeightedBound weighted_lct_upper_bound(const BPoly& f, const Weights& w) {
    require_origin(f, "weighted bound");
    WeightedOrder wo = weighted_order(f, w);
    return {w, wo.weight, (w.wx + w.wy) / wo.weight, wo.leading_part};
}

}  // namespace lct
