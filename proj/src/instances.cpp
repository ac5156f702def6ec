#include "lct/instances.hpp"

#include <set>

#include "lct/error.hpp"
#include "lct/localinv.hpp"

namespace lct {

namespace {

Rat draw(std::mt19937_64& rng, int num_bound, int den_bound) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
    return make_rat(num(rng), den(rng));
}

Rat draw_nonzero(std::mt19937_64& rng, int num_bound, int den_bound) {
    for (;;)
        if (Rat r = draw(rng, num_bound, den_bound); r != 0) return r;
}

// y, or x - t*y with t != 0.
BPoly random_line(std::mt19937_64& rng, std::set<Rat>* used_slopes) {
    for (;;) {
        std::uniform_int_distribution<int> pick(0, 4);
        Rat slope = pick(rng) == 0 ? Rat(0) : draw_nonzero(rng, 4, 2);
        if (used_slopes != nullptr && !used_slopes->insert(slope).second) continue;
        if (slope == 0) return BPoly::y();
        return BPoly::x() - BPoly::monomial(slope, 0, 1);
    }
}

// Binary form of degree n whose y^n coefficient is nonzero.
BPoly random_form(std::mt19937_64& rng, int n) {
    BPoly g = BPoly::monomial(draw_nonzero(rng, 4, 3), 0, n);
    std::bernoulli_distribution keep(0.5);
    for (int i = 1; i <= n; ++i)
        if (keep(rng)) g += BPoly::monomial(draw_nonzero(rng, 4, 3), i, n - i);
    return g;
}

BPoly random_change(std::mt19937_64& rng, const BPoly& f) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        Matrix2 m{Rat(entry(rng)), Rat(entry(rng)), Rat(entry(rng)), Rat(entry(rng))};
        if (m.det() != 0) return linear_change(f, m);
    }
}

BPoly build(std::mt19937_64& rng, int d, bool component, int k, std::set<Rat>* slopes) {
    const BPoly x = BPoly::x();
    if (component) {
        BPoly cone = x.pow(k);
        for (int j = 0; j < d - 2 - k; ++j) cone = cone * random_line(rng, slopes);
        return x * (cone + random_form(rng, d - 1));
    }
    BPoly cone = x.pow(k);
    for (int j = 0; j < d - 1 - k; ++j) cone = cone * random_line(rng, slopes);
    return cone + random_form(rng, d);
}

void require(int d) {
    if (d < 3) throw Error(ErrorCode::degree_too_small, "degree must be at least 3");
}

}  // namespace

HighMultInstance random_high_mult_instance(std::mt19937_64& rng, int d, bool component, bool change_coordinates) {
    require(d);
    std::uniform_int_distribution<int> pick_k(component ? 1 : 2, component ? d - 2 : d - 1);
    for (;;) {
        const int k = pick_k(rng);
        BPoly f = build(rng, d, component, k, nullptr);
        if (!is_square_free(f)) continue;
        if (change_coordinates) f = random_change(rng, f);
        return {f, component, k, d};
    }
}

HighMultInstance random_component_chain_instance(std::mt19937_64& rng, int d) {
    require(d);
    // 2(k+1) > d-1 and k <= d-2.
    std::uniform_int_distribution<int> pick_k((d - 1) / 2, d - 2);
    for (;;) {
        const int k = pick_k(rng);
        std::set<Rat> slopes;
        BPoly f = build(rng, d, true, k, &slopes);
        if (is_square_free(f)) return {f, true, k, d};
    }
}

}  // namespace lct
