#include "lct/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "lct/classify.hpp"
#include "lct/error.hpp"
#include "lct/highmult.hpp"
#include "lct/instances.hpp"
#include "lct/localinv.hpp"
#include "lct/parse.hpp"
#include "lct/resolution.hpp"
#include "lct/upoly.hpp"

namespace lct {

namespace {

// Records the first failure and keeps counting.
class Checker {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        if (!ok && first_failure_.empty()) first_failure_ = what();
        ok_ = ok_ && ok;
    }
    void count(long n = 1) { checked_ += n; }
    bool ok() const { return ok_; }
    long checked() const { return checked_; }
    const std::string& failure() const { return first_failure_; }
    void note(std::string text) { note_ = std::move(text); }
    const std::string& note() const { return note_; }

private:
    bool ok_ = true;
    long checked_ = 0;
    std::string first_failure_;
    std::string note_;
};

std::string mismatch(const BPoly& f, const std::string& expected, const std::string& got) {
    return "f = " + render(f) + ": expected " + expected + ", got " + got;
}

bool fast(AcceptanceScope s) { return s == AcceptanceScope::fast; }

std::string join(const std::vector<Rat>& v) {
    std::string out;
    for (const auto& r : v) out += (out.empty() ? "" : ", ") + to_string(r);
    return "{" + out + "}";
}

std::string table1_row(int d) {
    static const char* rows[] = {
        "", "1", "1", "1, 5/6, 3/4, 2/3", "1, 5/6, 3/4, 7/10, 2/3, 9/14, 5/8, 3/5, 7/12, 5/9, 1/2",
        "1, 5/6, 3/4, 7/10, 2/3, 9/14, 5/8, 11/18, 3/5, 13/22, 7/12, 15/26, 4/7, 9/16, 5/9, 11/20, 6/11, 8/15, 1/2, "
        "7/15, 5/11, 9/20, 7/16, 2/5"};
    return rows[d];
}

std::vector<Rat> parse_list(const std::string& text) {
    std::vector<Rat> v;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        v.push_back(parse_rat(item));
    }
    std::sort(v.begin(), v.end());
    return v;
}

void table1(Checker& c, AcceptanceScope, std::uint64_t) {
    for (int d = 1; d <= 5; ++d) {
        auto expected = parse_list(table1_row(d));
        auto got = table1_values(d);
        c.count();
        c.expect(got == expected, [&] { return "d = " + std::to_string(d) + ": expected " + join(expected) + ", got " + join(got); });
    }
    c.expect(table1_values(5).size() == 24, [] { return "row 5 does not have 24 values"; });
}

void closed_form_vs_oracle(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    const int per_degree = fast(scope) ? 30 : 100;
    long skipped = 0;
    for (int d = 3; d <= 6; ++d) {
        std::mt19937_64 rng(seed * 1000003 + d);
        for (int n = 0; n < per_degree;) {
            auto inst = random_high_mult_instance(rng, d, n % 2 == 0);
            ResolutionTree t;
            try {
                t = resolve_over_origin(inst.f);
            } catch (const IrrationalCenterError&) {
                ++skipped;
                continue;
            }
            const Rat closed = analyze_high_mult(inst.f).lct, engine = lct_from_tree(t);
            c.count();
            c.expect(closed == engine, [&] { return mismatch(inst.f, to_string(closed), to_string(engine)); });
            ++n;
        }
    }
    c.note(std::to_string(skipped) + " draws rejected for irrational centers");
}

void lambda_realization(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    const int max_d = fast(scope) ? 5 : 7;
    const int per_degree = fast(scope) ? 30 : 100;
    for (int d = 3; d <= max_d; ++d) {
        auto values = lambda_set(d);
        for (const auto& target : values) {
            BPoly f = construct_witness(d, target);
            Rat got = analyze_high_mult(f).lct;
            c.count();
            c.expect(got == target && f.degree() == ExtInt(d), [&] { return mismatch(f, to_string(target), to_string(got)); });
        }
        std::mt19937_64 rng(seed * 7919 + d);
        for (int n = 0; n < per_degree; ++n) {
            auto inst = random_high_mult_instance(rng, d, n % 2 == 0);
            Rat got = analyze_high_mult(inst.f).lct;
            c.count();
            c.expect(std::binary_search(values.begin(), values.end(), got),
                     [&] { return mismatch(inst.f, "a member of " + join(values), to_string(got)); });
        }
    }
}

int samples_per_row(AcceptanceScope scope) { return fast(scope) ? 10 : 50; }

void normal_form_invariants(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    for (const auto& e : normal_form_table())
        for (int s = 0; s < samples_per_row(scope); ++s) {
            BPoly f = sample_normal_form(e.symbol, seed * 100 + static_cast<std::uint64_t>(s));
            const ExtInt mult = multiplicity_at_origin(f), mu = milnor_number_origin(f);
            c.count();
            c.expect(mult == ExtInt(e.mult) && mu == ExtInt(e.mu), [&] {
                return mismatch(f, e.symbol + " (mult " + std::to_string(e.mult) + ", mu " + std::to_string(e.mu) + ")",
                                "mult " + mult.str() + ", mu " + mu.str());
            });
        }
}

void classifier_round_trip(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    for (const auto& e : normal_form_table())
        for (int s = 0; s < samples_per_row(scope); ++s) {
            BPoly f = sample_normal_form(e.symbol, seed * 100 + static_cast<std::uint64_t>(s));
            std::string got;
            try {
                got = classify_singularity(f).symbol;
            } catch (const Error& err) {
                got = err.what();
            }
            c.count();
            c.expect(got == e.symbol, [&] { return mismatch(f, e.symbol, got); });
        }
    const auto& t244 = normal_form_entry("T(2,4,4)");
    for (int a : {2, -2}) {
        BPoly f = instantiate_normal_form(t244, {Rat(a)});
        ErrorCode code = ErrorCode::internal;
        try {
            classify_singularity(f);
        } catch (const Error& err) {
            code = err.code();
        }
        c.count();
        c.expect(!restriction_holds(t244, {Rat(a)}) && code == ErrorCode::not_square_free,
                 [&] { return mismatch(f, "NotSquareFree", error_name(code)); });
    }
    // 4a^3 + 27 is irreducible of degree 3, so it has no rational root.
    auto fac = factor_univariate(UPoly({Rat(27), Rat(0), Rat(0), Rat(4)}));
    c.count();
    c.expect(fac.factors.size() == 1 && fac.factors[0].poly.size() == 4 && fac.factors[0].exponent == 1,
             [] { return "4a^3 + 27 has a rational root"; });
}

void bound_properties(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    struct Item {
        BPoly f;
        Rat lct;
        bool high_mult;
    };
    std::vector<Item> corpus;
    for (const auto& e : normal_form_table())
        for (int s = 0; s < samples_per_row(scope); ++s)
            corpus.push_back({sample_normal_form(e.symbol, seed * 100 + static_cast<std::uint64_t>(s)), e.lct, false});
    std::mt19937_64 rng(seed * 31337);
    for (int d = 3; d <= (fast(scope) ? 5 : 7); ++d) {
        for (const auto& target : lambda_set(d)) corpus.push_back({construct_witness(d, target), target, true});
        for (int n = 0; n < (fast(scope) ? 10 : 40); ++n) {
            auto inst = random_high_mult_instance(rng, d, n % 2 == 0);
            corpus.push_back({inst.f, analyze_high_mult(inst.f).lct, true});
        }
    }
    std::uniform_int_distribution<int> w(1, 9);
    for (const auto& item : corpus) {
        const int mult = static_cast<int>(multiplicity_at_origin(item.f).value());
        c.count();
        c.expect(make_rat(1, mult) <= item.lct && item.lct <= make_rat(2, mult),
                 [&] { return mismatch(item.f, "lct in [1/mult, 2/mult]", to_string(item.lct)); });
        if (item.high_mult) {
            const int d = static_cast<int>(item.f.degree().value());
            c.expect(item.lct <= make_rat(2, d - 1), [&] { return mismatch(item.f, "lct <= 2/(d-1)", to_string(item.lct)); });
        }
        for (int k = 0; k < 20; ++k) {
            Weights wt{Rat(w(rng)), Rat(w(rng))};
            const Rat b = weighted_lct_upper_bound(item.f, wt).b;
            c.expect(item.lct <= b, [&] {
                return mismatch(item.f, "lct <= " + to_string(b) + " for weights (" + to_string(wt.wx) + ", " +
                                            to_string(wt.wy) + ")", to_string(item.lct));
            });
        }
    }
}

BPoly random_germ(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg), coeff(-3, 3), terms(1, 4);
    for (;;) {
        BPoly p;
        const int n = terms(rng);
        for (int k = 0; k < n; ++k) {
            const int d = deg(rng);
            std::uniform_int_distribution<int> split(0, d);
            const int i = split(rng);
            p += BPoly::monomial(Rat(coeff(rng)), i, d - i);
        }
        if (!p.is_zero()) return p;
    }
}

void fulton_properties(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 4242 + 1);
    const int pairs = fast(scope) ? 150 : 500;
    for (int n = 0; n < pairs; ++n) {
        BPoly f = random_germ(rng, 4), g = random_germ(rng, 4), h = random_germ(rng, 3);
        const ExtInt fg = intersection_multiplicity_origin(f, g), gf = intersection_multiplicity_origin(g, f);
        const ExtInt fh = intersection_multiplicity_origin(f, h), fgh = intersection_multiplicity_origin(f, g * h);
        c.count();
        c.expect(fg == gf, [&] { return "I(" + render(f) + ", " + render(g) + ") = " + fg.str() + " but reversed " + gf.str(); });
        c.expect(fgh == fg + fh, [&] {
            return "I(" + render(f) + ", (" + render(g) + ")*(" + render(h) + ")) = " + fgh.str() + " but parts sum to " +
                   (fg + fh).str();
        });
    }
    for (int n = 0; n < pairs; ++n) {
        BPoly f = random_germ(rng, 5);
        if (f.constant_term() != 0 || !is_square_free(f)) continue;
        const ExtInt mu = milnor_number_origin(f);
        const bool smooth = multiplicity_at_origin(f) == ExtInt(1);
        c.count();
        c.expect((mu == ExtInt(0)) == smooth, [&] { return mismatch(f, smooth ? "mu = 0" : "mu > 0", mu.str()); });
    }
    for (int k = 1; k <= 12; ++k)
        for (int s = 0; s < samples_per_row(scope); ++s) {
            BPoly f = sample_normal_form("A(" + std::to_string(k) + ")", seed * 100 + static_cast<std::uint64_t>(s));
            const ExtInt mu = milnor_number_origin(f);
            c.count();
            c.expect(mu == ExtInt(k), [&] { return mismatch(f, std::to_string(k), mu.str()); });
        }
}

void resolution_ledger(Checker& c, AcceptanceScope scope, std::uint64_t seed) {
    const BPoly cusp = parse_poly("x^2 + y^3");
    auto t = resolve_over_origin(cusp);
    std::vector<std::pair<int, int>> got;
    for (const auto& n : t.nodes) got.emplace_back(n.divisor.m, n.divisor.a);
    const std::vector<std::pair<int, int>> expected{{2, 1}, {3, 2}, {6, 4}};
    c.count();
    c.expect(got == expected && lct_from_tree(t) == make_rat(5, 6), [&] {
        std::string s;
        for (auto [m, a] : got) s += "(" + std::to_string(m) + "," + std::to_string(a) + ")";
        return mismatch(cusp, "(2,1)(3,2)(6,4), lct 5/6", s + ", lct " + to_string(lct_from_tree(t)));
    });

    std::mt19937_64 rng(seed * 2718 + 3);
    for (int d = 3; d <= 7; ++d)
        for (int n = 0; n < (fast(scope) ? 5 : 20); ++n) {
            auto inst = random_component_chain_instance(rng, d);
            auto tree = resolve_over_origin(inst.f);
            const auto a = analyze_high_mult(inst.f);
            const Rat lambda = a.lct;
            const auto coeffs = log_pullback_coefficients(tree, lambda);
            c.count();
            c.expect(static_cast<int>(tree.nodes.size()) == a.k_q + 1, [&] {
                return mismatch(inst.f, std::to_string(a.k_q + 1) + " blowups", std::to_string(tree.nodes.size()));
            });
            for (int j = 1; j <= a.k_q && j + 1 <= static_cast<int>(tree.nodes.size()); ++j) {
                const Rat want = lambda * (j * d + 1) - 2 * j, have = coeffs.at(j + 1);
                c.expect(want == have, [&] {
                    return mismatch(inst.f, "coefficient " + to_string(want) + " on divisor " + std::to_string(j + 1),
                                    to_string(have));
                });
            }
        }
}

struct CriterionDef {
    const char* name;
    double limit;
    void (*run)(Checker&, AcceptanceScope, std::uint64_t);
};

const CriterionDef criteria[] = {
    {"threshold table by degree", 1.0, table1},
    {"closed form equals resolution oracle", 60.0, closed_form_vs_oracle},
    {"threshold set realization", 10.0, lambda_realization},
    {"normal-form invariants", 30.0, normal_form_invariants},
    {"classifier round trip", 0.0, classifier_round_trip},
    {"bound properties", 0.0, bound_properties},
    {"intersection multiplicity properties", 0.0, fulton_properties},
    {"resolution ledger", 0.0, resolution_ledger},
};

}  // namespace

CriterionResult run_criterion(int id, AcceptanceScope scope, std::uint64_t seed) {
    if (id < 1 || id > 8) throw Error(ErrorCode::invalid_argument, "criterion id must be 1..8");
    const CriterionDef& def = criteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = def.name;
    r.limit_seconds = def.limit;
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        def.run(c, scope, seed);
    } catch (const std::exception& e) {
        c.expect(false, [&] { return std::string("unexpected error: ") + e.what(); });
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checked = c.checked();
    r.passed = c.ok() && (r.limit_seconds == 0 || r.seconds < r.limit_seconds);
    if (!c.ok()) {
        r.detail = c.failure();
    } else if (!r.passed) {
        std::ostringstream os;
        os << "took " << r.seconds << " s, limit " << r.limit_seconds << " s";
        r.detail = os.str();
    } else {
        r.detail = c.note();
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(AcceptanceScope scope, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, scope, seed));
    return out;
}

std::string format_result_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (checked " << r.checked
       << ", " << r.seconds << " s";
    if (r.limit_seconds > 0) os << " of " << r.limit_seconds << " s";
    os << ")";
    if (!r.detail.empty()) os << "  " << r.detail;
    return os.str();
}

}  // namespace lct
