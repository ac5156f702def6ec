#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "lct/error.hpp"
#include "lct/factor.hpp"
#include "lct/parse.hpp"
#include "lct/upoly.hpp"
#include "support/gen.hpp"

using namespace lct;
using lct::testing::random_poly;

namespace {

BPoly P(const char* s) { return parse_poly(s); }

std::multiset<std::string> factor_set(const Factorization& f) {
    std::multiset<std::string> out;
    for (const auto& fac : f.factors) out.insert(render(fac.poly) + "^" + std::to_string(fac.exponent));
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

}  // namespace

TEST_CASE("parse_poly examples") {
    CHECK(P("x^2 + y^3") == BPoly({{{2, 0}, 1}, {{0, 3}, 1}}));
    CHECK(P("3/2*x*y - x*y") == BPoly({{{1, 1}, make_rat(1, 2)}}));
    CHECK(code_of([] { P("x^(-1)"); }) == ErrorCode::non_polynomial);
    CHECK(code_of([] { P("1/x"); }) == ErrorCode::non_polynomial);
    CHECK(code_of([] { P("x^-2"); }) == ErrorCode::non_polynomial);
    CHECK(code_of([] { P("2x"); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { P("x + "); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { P("(x + y"); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { P("z"); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { P("x/0"); }) == ErrorCode::syntax_error);
    CHECK(P("-x^2 + (x+y)^2 - 2*x*y") == P("y^2"));
    CHECK(P("(x+1)/2") == P("1/2*x + 1/2"));
    CHECK(P(" x ^ 3 ") == P("x^3"));
}

TEST_CASE("parse errors carry a position") {
    try {
        P("x + 2y");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("projective input is dehomogenized in the requested chart") {
    CHECK(parse_projective("x^2*z - y^3 + z^3", 'z') == P("x^2 - y^3 + 1"));
    CHECK(parse_projective("x^2*z - y^3 + z^3", 'x') == P("y - x^3 + y^3"));
    CHECK(code_of([] { parse_projective("x^2 + y", 'z'); }) == ErrorCode::invalid_argument);
}

TEST_CASE("render round trips") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        BPoly f = random_poly(rng, 6, 6, false);
        CHECK(parse_poly(render(f)) == f);
    }
    CHECK(render(P("y - x^2")) == "-x^2 + y");
    CHECK(render(BPoly()) == "0");
    CHECK(render(P("3/2*x*y^2 - 1")) == "3/2*x*y^2 - 1");
}

TEST_CASE("homogeneous_part") {
    CHECK(homogeneous_part(P("x^2 + y^3"), 2).poly() == P("x^2"));
    CHECK(homogeneous_part(P("x^3 + x^3*y + y^4"), 4).poly() == P("x^3*y + y^4"));
    CHECK(homogeneous_part(P("x^2 + y^3"), 5).is_zero());

    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        BPoly f = random_poly(rng, 7, 8, false);
        BPoly sum;
        for (int d = 0; d <= 7; ++d) sum += homogeneous_part(f, d).poly();
        CHECK(sum == f);
    }
}

TEST_CASE("multiplicity_at_origin") {
    CHECK(multiplicity_at_origin(P("x^2 + y^3")) == ExtInt(2));
    CHECK(multiplicity_at_origin(P("x^3*y + y^5")) == ExtInt(4));
    CHECK(multiplicity_at_origin(BPoly()).is_infinite());

    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        BPoly f = random_poly(rng, 4, 4, k % 2 == 0);
        BPoly g = random_poly(rng, 4, 4, k % 3 == 0);
        CHECK(multiplicity_at_origin(f * g) == multiplicity_at_origin(f) + multiplicity_at_origin(g));
    }
}

TEST_CASE("weighted_order") {
    auto w = weighted_order(P("x^3 + y^4"), {4, 3});
    CHECK(w.weight == 12);
    CHECK(w.leading_part == P("x^3 + y^4"));
    w = weighted_order(P("x^2*y^2 + x^3 + y^6"), {2, 1});
    CHECK(w.weight == 6);
    CHECK(w.leading_part == P("x^2*y^2 + x^3 + y^6"));
    CHECK(weighted_order(P("x"), {1, 1}).weight == 1);
    CHECK(code_of([] { weighted_order(BPoly(), {1, 1}); }) == ErrorCode::zero_polynomial);

    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        BPoly f = random_poly(rng, 6, 5, false);
        if (f.is_zero()) continue;
        CHECK(ExtInt(weighted_order(f, {1, 1}).weight.get_num().get_si()) == multiplicity_at_origin(f));
    }
}

TEST_CASE("translate_affine and linear_change") {
    CHECK(translate_affine(P("y - x^2"), {1, 1}) == P("y - 2*x - x^2"));
    CHECK(translate_affine(P("x*y"), {0, 0}) == P("x*y"));
    CHECK(translate_affine(P("x^2"), {-1, 0}) == P("(x-1)^2"));

    Matrix2 swap{0, 1, 1, 0};
    CHECK(linear_change(P("x^3 + x*y^3"), swap) == P("y^3 + y*x^3"));
    CHECK(linear_change(P("x^2"), Matrix2::identity()) == P("x^2"));
    CHECK(code_of([] { linear_change(P("x + y"), Matrix2{1, 2, 2, 4}); }) == ErrorCode::singular_matrix);

    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        BPoly f = random_poly(rng, 5, 6, false);
        Point p{lct::testing::small_rat(rng), lct::testing::small_rat(rng)};
        CHECK(translate_affine(translate_affine(f, p), {-p.x, -p.y}) == f);
        Matrix2 m{lct::testing::small_rat(rng), lct::testing::small_rat(rng), lct::testing::small_rat(rng),
                  lct::testing::small_rat(rng)};
        if (m.det() == 0) continue;
        BPoly g = linear_change(f, m);
        CHECK(linear_change(g, m.inverse()) == f);
        CHECK(multiplicity_at_origin(g) == multiplicity_at_origin(f));
    }
}

TEST_CASE("gcd_bivariate") {
    CHECK(gcd_bivariate(P("x^2*y"), P("x*y^2")) == P("x*y"));
    CHECK(gcd_bivariate(P("x^2+y^2"), P("x")) == P("1"));
    CHECK(gcd_bivariate(P("(x+y)^2*(x-y)"), P("(x+y)*y")) == P("x+y"));
    CHECK(gcd_bivariate(P("0"), P("-2*x")) == P("x"));
    CHECK(code_of([] { gcd_bivariate(BPoly(), BPoly()); }) == ErrorCode::both_zero);

    // Oracle: by construction the gcd of a*c and b*c is c when a and b are
    // coprime; always the gcd divides both inputs.
    std::mt19937_64 rng(21);
    for (int k = 0; k < 60; ++k) {
        BPoly a = random_poly(rng, 3, 4, false), b = random_poly(rng, 3, 4, false),
              c = random_poly(rng, 2, 3, false);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        BPoly g = gcd_bivariate(a * c, b * c);
        CHECK_NOTHROW(divide_exact(a * c, g));
        CHECK_NOTHROW(divide_exact(b * c, g));
        CHECK_NOTHROW(divide_exact(g, normalize_primitive(c).second));
    }
}

TEST_CASE("divide_exact") {
    CHECK(divide_exact(P("x^3 + x*y^3"), P("x")) == P("x^2 + y^3"));
    CHECK(code_of([] { divide_exact(P("x^2+y^2"), P("x")); }) == ErrorCode::not_divisible);
    CHECK(divide_exact(BPoly(), P("x")).is_zero());
    CHECK(code_of([] { divide_exact(P("x"), BPoly()); }) == ErrorCode::divisor_zero);
}

TEST_CASE("squarefree_decomposition") {
    auto sq = squarefree_decomposition(P("x^2*y^3"));
    CHECK(factor_set(sq) == std::multiset<std::string>{"x^2", "y^3"});
    CHECK_FALSE(sq.irreducible);
    CHECK(factor_set(squarefree_decomposition(P("(x+y)^2*(x-y)"))) == std::multiset<std::string>{"x + y^2", "x - y^1"});
    CHECK(factor_set(squarefree_decomposition(P("x^2+y^2"))) == std::multiset<std::string>{"x^2 + y^2^1"});

    std::mt19937_64 rng(33);
    for (int k = 0; k < 60; ++k) {
        BPoly a = random_poly(rng, 2, 3, false), b = random_poly(rng, 2, 3, false);
        if (a.is_zero() || b.is_zero()) continue;
        BPoly f = a * b.pow(2) * Rat(make_rat(-3, 7));
        auto d = squarefree_decomposition(f);
        CHECK(d.expand() == f);
        for (const auto& fac : d.factors) {
            BPoly g = gcd_bivariate(gcd_bivariate(fac.poly, fac.poly.diff_x()), fac.poly.diff_y());
            CHECK(g.is_constant());
        }
    }
}

TEST_CASE("factor_binary_form") {
    auto f = factor_binary_form(BinaryForm(P("x^2*y + y^3"), 3));
    CHECK(factor_set(f) == std::multiset<std::string>{"y^1", "x^2 + y^2^1"});
    CHECK(f.expand() == P("x^2*y + y^3"));
    CHECK(factor_set(factor_binary_form(BinaryForm(P("x^3"), 3))) == std::multiset<std::string>{"x^3"});
    CHECK(factor_set(factor_binary_form(BinaryForm(P("x^2*y^2"), 4))) == std::multiset<std::string>{"x^2", "y^2"});
    CHECK(code_of([] { factor_binary_form(BinaryForm(BPoly(), 2)); }) == ErrorCode::zero_polynomial);

    // Products of known irreducibles over Q come back exactly.
    const char* irreducibles[] = {"x - 2*y", "3*x + y", "x^2 + y^2", "x^2 - 2*y^2", "x^3 - 2*y^3",
                                  "x^4 + y^4", "x", "y", "x^2 + x*y + y^2"};
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> pick(0, 8), expo(1, 3), count(1, 4);
    for (int k = 0; k < 80; ++k) {
        std::map<std::string, int> expected;
        BPoly prod = BPoly::constant(make_rat(-5, 3));
        int n = 0;
        for (int c = count(rng); c > 0; --c) {
            const char* s = irreducibles[pick(rng)];
            int e = expo(rng);
            prod = prod * P(s).pow(e);
            expected[render(P(s))] += e;
            n += static_cast<int>(P(s).degree().value()) * e;
        }
        auto fac = factor_binary_form(BinaryForm(prod, n));
        CHECK(fac.expand() == prod);
        std::map<std::string, int> got;
        int total = 0;
        for (const auto& fc : fac.factors) {
            got[render(fc.poly)] += fc.exponent;
            total += static_cast<int>(fc.poly.degree().value()) * fc.exponent;
        }
        CHECK(got == expected);
        CHECK(total == n);
    }
}

TEST_CASE("univariate factorization over Q") {
    auto fac_strings = [](const UPoly& f) {
        std::multiset<std::string> out;
        auto uf = factor_univariate(f);
        UPoly back = UPoly::constant(uf.unit);
        for (const auto& [g, e] : uf.factors) {
            out.insert(render_univariate(g) + "^" + std::to_string(e));
            for (int k = 0; k < e; ++k) back = back * to_upoly(g);
        }
        CHECK(back == f);
        return out;
    };
    auto T = [](std::initializer_list<long> c) {
        std::vector<Rat> v;
        for (long x : c) v.emplace_back(x);
        return UPoly(v);
    };
    // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
    CHECK(fac_strings(T({4, 0, 0, 0, 1})) == std::multiset<std::string>{"t^2 + 2*t + 2^1", "t^2 - 2*t + 2^1"});
    // t^4 + 1 is irreducible but splits modulo every prime
    CHECK(fac_strings(T({1, 0, 0, 0, 1})) == std::multiset<std::string>{"t^4 + 1^1"});
    // t^8 - 1
    CHECK(fac_strings(T({-1, 0, 0, 0, 0, 0, 0, 0, 1})) ==
          std::multiset<std::string>{"t - 1^1", "t + 1^1", "t^2 + 1^1", "t^4 + 1^1"});
    // (2t - 3)^2 (t^2 - 2)
    UPoly f = T({-3, 2}) * T({-3, 2}) * T({-2, 0, 1}) * Rat(make_rat(1, 5));
    CHECK(fac_strings(f) == std::multiset<std::string>{"2*t - 3^2", "t^2 - 2^1"});
    // 4t^3 + 27 has no rational root
    CHECK(fac_strings(T({27, 0, 0, 4})) == std::multiset<std::string>{"4*t^3 + 27^1"});
}
