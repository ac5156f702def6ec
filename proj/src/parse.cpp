#include "lct/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "lct/error.hpp"

namespace lct {

namespace {

constexpr long max_exponent = 4096;

// Sparse polynomial in an arbitrary number of named variables.
using Exps = std::vector<int>;
using Sparse = std::map<Exps, Rat>;

void add_into(Sparse& acc, const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            add_into(r, e, ca * cb);
        }
    return r;
}

class Parser {
public:
    Parser(std::string_view text, std::string_view vars) : s_(text), vars_(vars) {}

    Sparse parse() {
        Sparse r = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            if (starts_operand()) fail("implicit multiplication is not allowed");
            fail(std::string("unexpected character '") + s_[pos_] + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::syntax_error) const {
        throw ParseError(code, msg, pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_operand() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    Sparse constant(const Rat& c) const {
        Sparse r;
        add_into(r, Exps(vars_.size(), 0), c);
        return r;
    }

    // Constant value of p, if p has no variable terms.
    static bool as_constant(const Sparse& p, Rat& out) {
        out = 0;
        for (const auto& [e, c] : p) {
            for (int k : e)
                if (k != 0) return false;
            out = c;
        }
        return true;
    }

    Sparse expr() {
        skip_ws();
        bool negate = false;
        if (peek('-') || peek('+')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        Sparse acc = term();
        if (negate)
            for (auto& kv : acc) kv.second = -kv.second;
        for (;;) {
            if (peek('+') || peek('-')) {
                bool minus = s_[pos_] == '-';
                ++pos_;
                Sparse t = term();
                for (const auto& [e, c] : t) add_into(acc, e, minus ? Rat(-c) : c);
            } else {
                return acc;
            }
        }
    }

    Sparse term() {
        Sparse acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, factor());
            } else if (peek('/')) {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                Sparse d = factor();
                Rat c;
                if (!as_constant(d, c)) {
                    pos_ = at;
                    fail("division by a non-constant", ErrorCode::non_polynomial);
                }
                if (c == 0) {
                    pos_ = at;
                    fail("division by zero");
                }
                Rat inv = 1 / c;
                for (auto& kv : acc) kv.second *= inv;
            } else {
                if (starts_operand()) fail("implicit multiplication is not allowed");
                return acc;
            }
        }
    }

    Sparse factor() {
        Sparse b = base();
        if (!peek('^')) return b;
        ++pos_;
        skip_ws();
        long e = 0;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = integer_literal_small();
        } else if (pos_ < s_.size() && s_[pos_] == '-') {
            fail("negative exponent", ErrorCode::non_polynomial);
        } else if (pos_ < s_.size() && s_[pos_] == '(') {
            std::size_t at = pos_;
            ++pos_;
            Sparse inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            Rat c;
            if (!as_constant(inner, c) || c.get_den() != 1 || c < 0) {
                pos_ = at;
                fail("exponent must be a nonnegative integer", ErrorCode::non_polynomial);
            }
            if (c > max_exponent) {
                pos_ = at;
                fail("exponent too large");
            }
            e = c.get_num().get_si();
        } else {
            fail("expected exponent");
        }
        if (peek('^')) fail("chained exponents are not allowed");
        Sparse r = constant(1);
        for (long k = 0; k < e; ++k) r = mul(r, b);
        return r;
    }

    long integer_literal_small() {
        std::size_t at = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.size() > 6 || std::stol(digits) > max_exponent) {
            pos_ = at;
            fail("exponent too large");
        }
        return std::stol(digits);
    }

    Sparse base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Sparse inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            return constant(Rat(BigInt(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto idx = vars_.find(c);
            bool lone = pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]));
            if (idx == std::string_view::npos || !lone) fail("unknown identifier");
            ++pos_;
            Exps e(vars_.size(), 0);
            e[idx] = 1;
            Sparse r;
            add_into(r, e, 1);
            return r;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::string_view vars_;
    std::size_t pos_ = 0;
};

}  // namespace

BPoly parse_poly(std::string_view text) {
    Sparse s = Parser(text, "xy").parse();
    BPoly::Terms t;
    for (const auto& [e, c] : s) t.emplace(Monomial{e[0], e[1]}, c);
    return BPoly(std::move(t));
}

BPoly parse_projective(std::string_view text, char chart) {
    std::string_view vars = "xyz";
    auto chart_idx = vars.find(chart);
    if (chart_idx == std::string_view::npos)
        throw Error(ErrorCode::invalid_argument, std::string("unknown projective chart '") + chart + "'");
    Sparse s = Parser(text, vars).parse();
    if (s.empty()) throw Error(ErrorCode::zero_polynomial, "projective form is zero");
    int deg = -1;
    for (const auto& [e, c] : s) {
        int d = e[0] + e[1] + e[2];
        if (deg >= 0 && d != deg) throw Error(ErrorCode::invalid_argument, "projective input is not homogeneous");
        deg = d;
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < 3; ++k)
        if (k != chart_idx) keep.push_back(k);
    BPoly out;
    for (const auto& [e, c] : s) out += BPoly::monomial(c, e[keep[0]], e[keep[1]]);
    return out;
}

std::string render(const BPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool has_var = m.degree() > 0;
        if (!has_var || mag != 1) {
            out += to_string(mag);
            if (has_var) out += "*";
        }
        if (m.i > 0) out += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
        if (m.i > 0 && m.j > 0) out += "*";
        if (m.j > 0) out += m.j == 1 ? "y" : "y^" + std::to_string(m.j);
    }
    return out;
}

}  // namespace lct
