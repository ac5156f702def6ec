#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lct {

/// Arbitrary-precision rational. gmpxx keeps values canonical after every
/// arithmetic operation (reduced, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Renders "n" for integers and "p/q" otherwise.
std::string to_string(const Rat& r);

/// Parses "n" or "p/q" (optional leading sign). Throws ParseError.
Rat parse_rat(std::string_view text);

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Integer extended by +infinity and -infinity. Used for multiplicities,
/// intersection numbers (which may be infinite) and the degree of the zero
/// polynomial (which is -infinity).
class ExtInt {
public:
    enum class Kind { finite, plus_infinity, minus_infinity };

    constexpr ExtInt() = default;
    constexpr ExtInt(long v) : value_(v) {}  // NOLINT: implicit by intent

    static constexpr ExtInt infinity() { return ExtInt(Kind::plus_infinity); }
    static constexpr ExtInt minus_infinity() { return ExtInt(Kind::minus_infinity); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::finite; }
    constexpr bool is_infinite() const { return kind_ == Kind::plus_infinity; }

    /// Finite value; throws std::logic_error when not finite.
    long value() const;

    friend ExtInt operator+(ExtInt a, ExtInt b);
    friend bool operator==(const ExtInt&, const ExtInt&) = default;
    friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b);

    std::string str() const;

private:
    constexpr explicit ExtInt(Kind k) : kind_(k) {}
    Kind kind_ = Kind::finite;
    long value_ = 0;
};

}  // namespace lct
