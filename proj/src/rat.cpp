#include "lct/rat.hpp"

#include <cctype>
#include <stdexcept>

#include "lct/error.hpp"

namespace lct {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError(ErrorCode::syntax_error, "malformed rational '" + std::string(text) + "'", 0);
    BigInt n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError(ErrorCode::syntax_error, "zero denominator in '" + std::string(text) + "'", 0);
    Rat r(n, d);
    r.canonicalize();
    return negative ? Rat(-r) : r;
}

long ExtInt::value() const {
    if (kind_ != Kind::finite) throw std::logic_error("ExtInt::value on an infinite value");
    return value_;
}

ExtInt operator+(ExtInt a, ExtInt b) {
    using K = ExtInt::Kind;
    if (a.kind_ == K::finite && b.kind_ == K::finite) return ExtInt(a.value_ + b.value_);
    if ((a.kind_ == K::plus_infinity && b.kind_ == K::minus_infinity) ||
        (a.kind_ == K::minus_infinity && b.kind_ == K::plus_infinity))
        throw std::logic_error("ExtInt: infinity - infinity");
    return a.kind_ != K::finite ? a : b;
}

std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    auto rank = [](const ExtInt& v) {
        switch (v.kind_) {
            case ExtInt::Kind::minus_infinity: return 0;
            case ExtInt::Kind::finite: return 1;
            case ExtInt::Kind::plus_infinity: return 2;
        }
        return 1;
    };
    if (auto c = rank(a) <=> rank(b); c != 0) return c;
    if (a.kind_ != ExtInt::Kind::finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

std::string ExtInt::str() const {
    switch (kind_) {
        case Kind::plus_infinity: return "inf";
        case Kind::minus_infinity: return "-inf";
        case Kind::finite: break;
    }
    return std::to_string(value_);
}

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::syntax_error: return "SyntaxError";
        case ErrorCode::non_polynomial: return "NonPolynomial";
        case ErrorCode::zero_polynomial: return "ZeroPolynomial";
        case ErrorCode::singular_matrix: return "SingularMatrix";
        case ErrorCode::both_zero: return "BothZero";
        case ErrorCode::not_divisible: return "NotDivisible";
        case ErrorCode::divisor_zero: return "DivisorZero";
        case ErrorCode::not_through_origin: return "NotThroughOrigin";
        case ErrorCode::not_square_free: return "NotSquareFree";
        case ErrorCode::wrong_multiplicity: return "WrongMultiplicity";
        case ErrorCode::degree_too_small: return "DegreeTooSmall";
        case ErrorCode::degree_out_of_range: return "DegreeOutOfRange";
        case ErrorCode::target_not_realizable: return "TargetNotRealizable";
        case ErrorCode::not_in_lambda_set: return "NotInLambdaSet";
        case ErrorCode::irrational_center: return "IrrationalCenter";
        case ErrorCode::resolution_cap: return "ResolutionCap";
        case ErrorCode::incomplete_tree: return "IncompleteTree";
        case ErrorCode::not_singular: return "NotSingular";
        case ErrorCode::not_classifiable: return "NotClassifiable";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::self_test_failure: return "SelfTestFailure";
        case ErrorCode::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace lct
