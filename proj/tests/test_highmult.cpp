#include <algorithm>
#include <random>

#include "doctest.h"
#include "lct/error.hpp"
#include "lct/highmult.hpp"
#include "lct/instances.hpp"
#include "lct/parse.hpp"

using namespace lct;

namespace {

BPoly P(const char* s) { return parse_poly(s); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

// Brute force over every possible special multiplicity m and both cases.
std::vector<Rat> lambda_oracle(int d) {
    std::vector<Rat> v{make_rat(2, d - 1)};
    for (int m = 1; m <= d - 1; ++m) {
        if (2 * m <= d - 1) continue;
        v.push_back(make_rat(2 * m + 1, d * m));
        // a line component leaves room for m - 1 >= 1 further contact
        if (m >= 2) v.push_back(make_rat(2 * m - 1, d * (m - 1) + 1));
    }
    for (auto& r : v) r.canonicalize();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

TEST_CASE("analyze_high_mult examples") {
    auto e6 = analyze_high_mult(P("y^3 + x^4"));
    CHECK(e6.d == 4);
    CHECK(e6.has_special_q);
    CHECK(e6.m == 3);
    CHECK_FALSE(e6.line_is_component);
    CHECK(e6.k_q == 3);
    CHECK(*e6.line == P("y"));
    CHECK(e6.lct == make_rat(7, 12));

    auto e7 = analyze_high_mult(P("y^3 + x^3*y"));
    CHECK(e7.line_is_component);
    CHECK(e7.k_q == 2);
    CHECK(e7.lct == make_rat(5, 9));

    auto d4 = analyze_high_mult(P("x*y*(x-y) + x^4"));
    CHECK_FALSE(d4.has_special_q);
    CHECK_FALSE(d4.l_q.has_value());
    CHECK(d4.lct == make_rat(2, 3));

    auto w12 = analyze_high_mult(P("y^4 + x^5"));
    CHECK(w12.m == 4);
    CHECK(w12.lct == make_rat(9, 20));

    // the special line need not be a coordinate axis
    CHECK(analyze_high_mult(P("(x - 2*y)^3 + y^4")).lct == make_rat(7, 12));
    CHECK(analyze_high_mult(P("x*y + x^3")).lct == Rat(1));
    CHECK(analyze_high_mult(P("y^2 + x^3")).lct == make_rat(5, 6));
}

TEST_CASE("analyze_high_mult errors") {
    CHECK(code_of([] { analyze_high_mult(P("x^2 + y^2")); }) == ErrorCode::degree_too_small);
    CHECK(code_of([] { analyze_high_mult(P("x^4 + y^4")); }) == ErrorCode::wrong_multiplicity);
    CHECK(code_of([] { analyze_high_mult(P("y^2 + x^4")); }) == ErrorCode::wrong_multiplicity);
    CHECK(code_of([] { analyze_high_mult(P("x^3 + y^3 + 1")); }) == ErrorCode::wrong_multiplicity);
    CHECK(code_of([] { analyze_high_mult(P("y^2*(y + x^2)")); }) == ErrorCode::not_square_free);
}

TEST_CASE("lambda_set matches the brute-force oracle and documented values") {
    CHECK(lambda_set(3) == std::vector<Rat>{make_rat(3, 4), make_rat(5, 6), Rat(1)});
    CHECK(lambda_set(4) == std::vector<Rat>{make_rat(5, 9), make_rat(7, 12), make_rat(3, 5), make_rat(5, 8), make_rat(2, 3)});
    CHECK(lambda_set(5) == std::vector<Rat>{make_rat(7, 16), make_rat(9, 20), make_rat(5, 11), make_rat(7, 15), make_rat(1, 2)});
    for (int d = 3; d <= 30; ++d) {
        auto v = lambda_set(d);
        CHECK(v == lambda_oracle(d));
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(v.front() >= make_rat(1, d - 1));
        CHECK(v.back() == make_rat(2, d - 1));
    }
    CHECK(code_of([] { lambda_set(2); }) == ErrorCode::degree_too_small);
}

TEST_CASE("construct_witness realizes every value") {
    CHECK(construct_witness(4, make_rat(7, 12)) == P("x^3 + y^4"));
    CHECK(construct_witness(4, make_rat(5, 9)) == P("x^3 + x*y^3"));
    CHECK(construct_witness(4, make_rat(2, 3)) == P("x*y*(x-y) + x^4"));
    for (int d = 3; d <= 9; ++d) {
        for (const auto& target : lambda_set(d)) {
            CAPTURE(d);
            BPoly f = construct_witness(d, target);
            CHECK(f.degree() == ExtInt(d));
            CHECK(analyze_high_mult(f).lct == target);
        }
    }
    CHECK(code_of([] { construct_witness(4, make_rat(1, 2)); }) == ErrorCode::target_not_realizable);
}

TEST_CASE("reducibility_hint") {
    CHECK(reducibility_hint(make_rat(5, 9), 4));
    CHECK_FALSE(reducibility_hint(make_rat(7, 12), 4));
    CHECK_FALSE(reducibility_hint(make_rat(2, 3), 4));
    CHECK(code_of([] { reducibility_hint(make_rat(1, 2), 4); }) == ErrorCode::not_in_lambda_set);
    for (int d = 3; d <= 9; ++d)
        for (const auto& target : lambda_set(d))
            CHECK(reducibility_hint(target, d) == analyze_high_mult(construct_witness(d, target)).line_is_component);
}

TEST_CASE("random instances: invariants, membership and coordinate invariance") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int d = 3; d <= 7; ++d) {
        auto values = lambda_set(d);
        for (int n = 0; n < 40; ++n) {
            auto inst = random_high_mult_instance(rng, d, n % 2 == 0);
            auto a = analyze_high_mult(inst.f);
            CAPTURE(render(inst.f));
            CHECK(std::binary_search(values.begin(), values.end(), a.lct));
            CHECK(a.lct <= make_rat(2, d - 1));
            CHECK(a.lct >= make_rat(1, d - 1));
            if (a.has_special_q) {
                CHECK(2 * a.m > d - 1);
                CHECK(a.line->degree() == ExtInt(1));
                CHECK(a.k_q == (a.line_is_component ? a.m - 1 : a.m));
                CHECK(a.lct == *a.l_q);
                CHECK(reducibility_hint(a.lct, d) == a.line_is_component);
            } else {
                CHECK(a.lct == make_rat(2, d - 1));
            }
            CHECK(analyze_high_mult(inst.f * make_rat(-3, 7)).lct == a.lct);
            Matrix2 m{Rat(entry(rng)), Rat(entry(rng)), Rat(entry(rng)), Rat(entry(rng))};
            if (m.det() != 0) CHECK(analyze_high_mult(linear_change(inst.f, m)).lct == a.lct);
        }
    }
}

TEST_CASE("instance generators honour their shape") {
    std::mt19937_64 rng(11);
    for (int d = 3; d <= 6; ++d)
        for (int n = 0; n < 20; ++n) {
            auto c = random_component_chain_instance(rng, d);
            auto a = analyze_high_mult(c.f);
            CHECK(a.has_special_q);
            CHECK(a.line_is_component);
            CHECK(a.m == c.k + 1);
            auto nc = random_high_mult_instance(rng, d, false, false);
            CHECK(nc.f.coeff(0, d) != 0);
        }
}
