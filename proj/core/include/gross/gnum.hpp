#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gross {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

std::string_view sign_name(Sign s) noexcept;

/// One summand c·①^p of a gross-number.
struct Term {
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

struct NumberClass {
    bool is_integer = false;
    bool is_finite = false;
    bool is_infinite = false;
    bool is_infinitesimal = false;

    friend bool operator==(const NumberClass&, const NumberClass&) = default;
};

/// How the grossone symbol is rendered.
enum class Glyph { Unicode, Ascii };

/// A finite sum of terms c·①^p with exact rational c and p.
///
/// The representation is canonical: terms are strictly descending by
/// exponent, no coefficient is zero, and zero is the empty sum. Two values are
/// equal iff their term lists are equal.
class GrossNumber {
public:
    GrossNumber() = default;
    GrossNumber(int value) : GrossNumber(Rational(value)) {}
    GrossNumber(long value) : GrossNumber(Rational(value)) {}
    GrossNumber(long long value) : GrossNumber(Rational(value)) {}
    GrossNumber(const Integer& value) : GrossNumber(Rational(value)) {}
    GrossNumber(const Rational& value);

    /// ①
    static GrossNumber grossone();
    /// coefficient·①^exponent
    static GrossNumber monomial(const Rational& exponent, const Rational& coefficient = 1);
    /// Builds the canonical form of an arbitrary term list: like exponents are
    /// merged and zero coefficients dropped.
    static GrossNumber from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Sign sign() const noexcept;

    /// Highest exponent present. Requires a nonzero value.
    const Rational& leading_exponent() const;
    const Rational& leading_coefficient() const;
    /// Coefficient at `exponent` (zero when absent).
    Rational coefficient(const Rational& exponent) const;

    /// True when the value is a plain rational (no ① terms at all).
    bool is_rational() const noexcept;
    /// The rational value; requires is_rational().
    Rational to_rational() const;

    GrossNumber operator-() const;
    GrossNumber& operator+=(const GrossNumber& rhs);
    GrossNumber& operator-=(const GrossNumber& rhs);
    GrossNumber& operator*=(const GrossNumber& rhs);

    friend GrossNumber operator+(GrossNumber lhs, const GrossNumber& rhs) { return lhs += rhs; }
    friend GrossNumber operator-(GrossNumber lhs, const GrossNumber& rhs) { return lhs -= rhs; }
    friend GrossNumber operator*(const GrossNumber& lhs, const GrossNumber& rhs);

    friend bool operator==(const GrossNumber&, const GrossNumber&) = default;
    friend std::strong_ordering operator<=>(const GrossNumber& lhs, const GrossNumber& rhs);

private:
    std::vector<Term> terms_;
};

/// Sign of x − y. Decided by the leading coefficient of the difference.
Sign cmp(const GrossNumber& x, const GrossNumber& y) noexcept;

NumberClass classify(const GrossNumber& x);

/// Integer in the grossone sense: no negative exponents and an integral
/// constant term; ① is divisible by every finite positive integer so the
/// coefficients of positive powers may be any rationals.
bool is_integer(const GrossNumber& x);
bool is_finite(const GrossNumber& x);
bool is_infinite(const GrossNumber& x);

/// Exact quotient by long division in powers of ①. Throws DivideByZero, or
/// NotExact when a remainder survives below the divisor's leading power.
GrossNumber div_exact(const GrossNumber& x, const GrossNumber& y);

GrossNumber pow(const GrossNumber& base, unsigned exponent);

/// Parses the canonical numeral grammar ("2①+1", "①^2-3", "1/2G1^(-1)", "0.25").
/// Throws SyntaxError.
GrossNumber parse_numeral(std::string_view text);

std::string format_numeral(const GrossNumber& x, Glyph glyph = Glyph::Unicode);
std::string format_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const GrossNumber& x);

} // namespace gross
