#include "lct/classify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "json.hpp"
#include "lct/error.hpp"
#include "lct/factor.hpp"
#include "lct/parse.hpp"
#include "tables_data.hpp"

namespace lct {

namespace {

using nlohmann::json;

struct Tables {
    std::vector<NormalFormEntry> rows;
    std::map<int, std::vector<std::string>> by_degree;
};

const Tables& tables() {
    static const Tables t = [] {
        Tables out;
        json doc = json::parse(detail::tables_json);
        for (const auto& r : doc.at("normal_forms")) {
            NormalFormEntry e;
            e.symbol = r.at("symbol").get<std::string>();
            e.family = r.at("family").get<std::string>();
            e.indices = r.at("indices").get<std::vector<int>>();
            e.normal_form = r.at("normal_form").get<std::string>();
            e.parameters = r.at("parameters").get<std::vector<std::string>>();
            e.restriction = r.at("restriction").get<std::string>();
            e.mult = r.at("mult").get<int>();
            e.mu = r.at("mu").get<int>();
            e.cone_pattern = r.at("cone_pattern").get<std::vector<int>>();
            e.lct = parse_rat(r.at("lct").get<std::string>());
            out.rows.push_back(std::move(e));
        }
        for (const auto& [d, symbols] : doc.at("singularities_by_degree").items())
            out.by_degree[std::stoi(d)] = symbols.get<std::vector<std::string>>();
        return out;
    }();
    return t;
}

void require_degree(int d) {
    if (d < 1 || d > 5) throw Error(ErrorCode::degree_out_of_range, "degree must be between 1 and 5, got " + std::to_string(d));
}

std::vector<int> digit_groups(std::string_view s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!cur.empty()) {
            out.push_back(std::stoi(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

Rat draw_param(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    return make_rat(num(rng), den(rng));
}

}  // namespace

std::string_view embedded_tables_json() { return detail::tables_json; }

const std::vector<NormalFormEntry>& normal_form_table() { return tables().rows; }

std::string canonical_symbol(std::string_view text) {
    auto fail = [&] { return Error(ErrorCode::invalid_argument, "unknown singularity symbol '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    std::vector<int> nums = digit_groups(text.substr(1));
    std::string sym;
    if (letter == 'T') {
        // "T236" and "T2310" carry no separators
        if (nums.size() == 1) {
            std::string digits = std::to_string(nums[0]);
            if (digits.size() < 3) throw fail();
            nums = {digits[0] - '0', digits[1] - '0', std::stoi(digits.substr(2))};
        }
        if (nums.size() != 3) throw fail();
        sym = "T(" + std::to_string(nums[0]) + "," + std::to_string(nums[1]) + "," + std::to_string(nums[2]) + ")";
    } else {
        if (nums.size() != 1) throw fail();
        sym = (letter == 'A' || letter == 'D') ? std::string(1, letter) + "(" + std::to_string(nums[0]) + ")"
                                               : std::string(1, letter) + std::to_string(nums[0]);
    }
    for (const auto& e : normal_form_table())
        if (e.symbol == sym) return sym;
    throw fail();
}

const NormalFormEntry& normal_form_entry(std::string_view symbol) {
    const std::string sym = canonical_symbol(symbol);
    for (const auto& e : normal_form_table())
        if (e.symbol == sym) return e;
    throw Error(ErrorCode::invalid_argument, "unknown singularity symbol '" + std::string(symbol) + "'");
}

std::vector<std::string> allowed_types(int d) {
    require_degree(d);
    auto it = tables().by_degree.find(d);
    return it == tables().by_degree.end() ? std::vector<std::string>{} : it->second;
}

std::vector<Rat> table1_values(int d) {
    std::vector<Rat> v{Rat(1)};
    for (const auto& s : allowed_types(d)) v.push_back(normal_form_entry(s).lct);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

SingularityClass classify_singularity(const BPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "classify_singularity: zero polynomial");
    if (f.constant_term() != 0) throw Error(ErrorCode::not_through_origin, "curve does not pass through the origin");
    const ExtInt mult = multiplicity_at_origin(f);
    if (mult <= ExtInt(1)) throw Error(ErrorCode::not_singular, "the origin is a smooth point");
    if (!is_square_free(f)) throw Error(ErrorCode::not_square_free, "curve is not reduced: " + render(f));

    SingularityClass out;
    out.mult = static_cast<int>(mult.value());
    out.pattern = tangent_cone_pattern(f);
    out.mu = static_cast<int>(milnor_number_origin(f).value());
    for (const auto& e : normal_form_table()) {
        if (e.mult == out.mult && e.mu == out.mu && e.cone_pattern == out.pattern.entries) {
            out.symbol = e.symbol;
            out.lct = e.lct;
            return out;
        }
    }
    std::string pattern;
    for (int x : out.pattern.entries) pattern += (pattern.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorCode::not_classifiable, "no table entry with mult " + std::to_string(out.mult) + ", cone pattern {" +
                                                 pattern + "}, mu " + std::to_string(out.mu));
}

Threshold lct_low_degree(const BPoly& f, const Point& p) {
    if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "lct_low_degree: zero polynomial");
    if (f.degree() > ExtInt(5)) throw Error(ErrorCode::degree_out_of_range, "degree exceeds 5: " + f.degree().str());
    if (!is_square_free(f)) throw Error(ErrorCode::not_square_free, "curve is not reduced: " + render(f));
    const BPoly g = translate_affine(f, p);
    if (g.constant_term() != 0) return Threshold::inf();
    if (multiplicity_at_origin(g) == ExtInt(1)) return Threshold::of(1);
    return Threshold::of(classify_singularity(g).lct);
}

bool restriction_holds(const NormalFormEntry& e, const std::vector<Rat>& params) {
    if (params.size() != e.parameters.size())
        throw Error(ErrorCode::invalid_argument, e.symbol + " takes " + std::to_string(e.parameters.size()) + " parameters");
    const std::string& r = e.restriction;
    if (r == "none") return true;
    const Rat& a = params.at(0);
    if (r == "4a^3+27!=0") return 4 * a * a * a + 27 != 0;
    if (r == "a^2!=4") return a * a != 4;
    if (r == "a!=0") return a != 0;
    if (r == "f5 squarefree") {
        Factorization fac = factor_binary_form(homogeneous_part(instantiate_normal_form(e, params), 5));
        return std::all_of(fac.factors.begin(), fac.factors.end(), [](const Factor& x) { return x.exponent == 1; });
    }
    throw Error(ErrorCode::internal, "unknown restriction '" + r + "'");
}

BPoly instantiate_normal_form(const NormalFormEntry& e, const std::vector<Rat>& params) {
    if (params.size() != e.parameters.size())
        throw Error(ErrorCode::invalid_argument, e.symbol + " takes " + std::to_string(e.parameters.size()) + " parameters");
    std::string text;
    for (char c : e.normal_form) {
        auto it = std::find(e.parameters.begin(), e.parameters.end(), std::string(1, c));
        if (it == e.parameters.end()) {
            text += c;
        } else {
            text += "(" + to_string(params[static_cast<size_t>(it - e.parameters.begin())]) + ")";
        }
    }
    return parse_poly(text);
}

BPoly sample_normal_form(std::string_view symbol, std::uint64_t seed) {
    const NormalFormEntry& e = normal_form_entry(symbol);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(&e - normal_form_table().data())};
    std::mt19937_64 rng(seq);
    for (;;) {
        std::vector<Rat> params;
        for (size_t i = 0; i < e.parameters.size(); ++i) params.push_back(draw_param(rng));
        if (!restriction_holds(e, params)) continue;
        BPoly f = instantiate_normal_form(e, params);
        if (is_square_free(f)) return f;
    }
}

}  // namespace lct
