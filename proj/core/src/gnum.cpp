#include "gross/gnum.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "gross/error.hpp"
#include "gross/scanner.hpp"

namespace gross {

std::string_view sign_name(Sign s) noexcept
{
    switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    }
    return "Zero";
}

namespace {

Sign sign_of(const Rational& q) noexcept
{
    const int s = q.sign();
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

// Merge two canonical term lists, scaling the second by `factor` (±1).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int factor)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent > a[i].exponent) {
            out.push_back({b[j].exponent, factor * b[j].coefficient});
            ++j;
        } else {
            Rational c = a[i].coefficient + factor * b[j].coefficient;
            if (c != 0) {
                out.push_back({a[i].exponent, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

GrossNumber::GrossNumber(const Rational& value)
{
    if (value != 0) {
        terms_.push_back({Rational(0), value});
    }
}

GrossNumber GrossNumber::grossone() { return monomial(1, 1); }

GrossNumber GrossNumber::monomial(const Rational& exponent, const Rational& coefficient)
{
    GrossNumber x;
    if (coefficient != 0) {
        x.terms_.push_back({exponent, coefficient});
    }
    return x;
}

GrossNumber GrossNumber::from_terms(std::vector<Term> terms)
{
    std::map<Rational, Rational, std::greater<>> acc;
    for (auto& t : terms) {
        acc[t.exponent] += t.coefficient;
    }
    GrossNumber x;
    for (auto& [e, c] : acc) {
        if (c != 0) {
            x.terms_.push_back({e, c});
        }
    }
    return x;
}

Sign GrossNumber::sign() const noexcept
{
    return terms_.empty() ? Sign::Zero : sign_of(terms_.front().coefficient);
}

const Rational& GrossNumber::leading_exponent() const
{
    if (terms_.empty()) {
        throw Error(Errc::InvalidArgument, "zero has no leading term");
    }
    return terms_.front().exponent;
}

const Rational& GrossNumber::leading_coefficient() const
{
    if (terms_.empty()) {
        throw Error(Errc::InvalidArgument, "zero has no leading term");
    }
    return terms_.front().coefficient;
}

Rational GrossNumber::coefficient(const Rational& exponent) const
{
    for (const auto& t : terms_) {
        if (t.exponent == exponent) {
            return t.coefficient;
        }
    }
    return 0;
}

bool GrossNumber::is_rational() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

Rational GrossNumber::to_rational() const
{
    if (!is_rational()) {
        throw Error(Errc::InvalidArgument, format_numeral(*this) + " is not a plain rational");
    }
    return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

GrossNumber GrossNumber::operator-() const
{
    GrossNumber x = *this;
    for (auto& t : x.terms_) {
        t.coefficient = -t.coefficient;
    }
    return x;
}

GrossNumber& GrossNumber::operator+=(const GrossNumber& rhs)
{
    terms_ = merge(terms_, rhs.terms_, 1);
    return *this;
}

GrossNumber& GrossNumber::operator-=(const GrossNumber& rhs)
{
    terms_ = merge(terms_, rhs.terms_, -1);
    return *this;
}

GrossNumber& GrossNumber::operator*=(const GrossNumber& rhs)
{
    *this = *this * rhs;
    return *this;
}

GrossNumber operator*(const GrossNumber& lhs, const GrossNumber& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    if (lhs.terms_.size() == 1 || rhs.terms_.size() == 1) {
        // A monomial factor keeps the other operand's order.
        const auto& mono = lhs.terms_.size() == 1 ? lhs.terms_.front() : rhs.terms_.front();
        const auto& other = lhs.terms_.size() == 1 ? rhs.terms_ : lhs.terms_;
        GrossNumber out;
        out.terms_.reserve(other.size());
        for (const auto& t : other) {
            out.terms_.push_back({t.exponent + mono.exponent, t.coefficient * mono.coefficient});
        }
        return out;
    }
    std::vector<Term> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            products.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
        }
    }
    return GrossNumber::from_terms(std::move(products));
}

std::strong_ordering operator<=>(const GrossNumber& lhs, const GrossNumber& rhs)
{
    switch (cmp(lhs, rhs)) {
    case Sign::Negative: return std::strong_ordering::less;
    case Sign::Positive: return std::strong_ordering::greater;
    case Sign::Zero: break;
    }
    return std::strong_ordering::equal;
}

Sign cmp(const GrossNumber& x, const GrossNumber& y) noexcept
{
    const auto a = x.terms();
    const auto b = y.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].exponent > b[j].exponent) {
            return sign_of(a[i].coefficient);
        }
        if (b[j].exponent > a[i].exponent) {
            return negate(sign_of(b[j].coefficient));
        }
        if (a[i].coefficient != b[j].coefficient) {
            return a[i].coefficient > b[j].coefficient ? Sign::Positive : Sign::Negative;
        }
        ++i;
        ++j;
    }
    if (i < a.size()) {
        return sign_of(a[i].coefficient);
    }
    if (j < b.size()) {
        return negate(sign_of(b[j].coefficient));
    }
    return Sign::Zero;
}

bool is_integer(const GrossNumber& x)
{
    for (const auto& t : x.terms()) {
        if (t.exponent < 0) {
            return false;
        }
        if (t.exponent == 0 && boost::multiprecision::denominator(t.coefficient) != 1) {
            return false;
        }
    }
    return true;
}

bool is_finite(const GrossNumber& x) { return x.is_zero() || x.leading_exponent() == 0; }

bool is_infinite(const GrossNumber& x) { return !x.is_zero() && x.leading_exponent() > 0; }

NumberClass classify(const GrossNumber& x)
{
    NumberClass c;
    c.is_integer = is_integer(x);
    c.is_finite = is_finite(x);
    c.is_infinite = is_infinite(x);
    c.is_infinitesimal = !x.is_zero() && x.leading_exponent() < 0;
    return c;
}

GrossNumber div_exact(const GrossNumber& x, const GrossNumber& y)
{
    if (y.is_zero()) {
        throw Error(Errc::DivideByZero);
    }
    const Rational& top = y.leading_exponent();
    const Rational& lead = y.leading_coefficient();
    GrossNumber quotient;
    GrossNumber remainder = x;
    while (!remainder.is_zero() && remainder.leading_exponent() >= top) {
        const GrossNumber step = GrossNumber::monomial(
            remainder.leading_exponent() - top, remainder.leading_coefficient() / lead);
        quotient += step;
        remainder -= step * y;
    }
    if (!remainder.is_zero()) {
        throw Error(Errc::NotExact, format_numeral(x) + " / " + format_numeral(y));
    }
    return quotient;
}

GrossNumber pow(const GrossNumber& base, unsigned exponent)
{
    GrossNumber result = 1;
    GrossNumber factor = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= factor;
        }
        exponent >>= 1;
        if (exponent != 0) {
            factor *= factor;
        }
    }
    return result;
}

GrossNumber parse_numeral(std::string_view text)
{
    Scanner scanner(text);
    if (scanner.at_end()) {
        scanner.fail("empty numeral");
    }
    GrossNumber x = scanner.numeral();
    if (!scanner.at_end()) {
        scanner.fail("unexpected trailing input");
    }
    return x;
}

std::string format_rational(const Rational& q)
{
    std::string out = boost::multiprecision::numerator(q).str();
    const Integer den = boost::multiprecision::denominator(q);
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

std::string format_numeral(const GrossNumber& x, Glyph glyph)
{
    if (x.is_zero()) {
        return "0";
    }
    const std::string_view one = glyph == Glyph::Unicode ? "\xE2\x91\xA0" : "G1";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        const bool negative = t.coefficient < 0;
        if (negative) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        const Rational magnitude = negative ? Rational(-t.coefficient) : t.coefficient;
        if (t.exponent == 0) {
            out += format_rational(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += format_rational(magnitude);
        }
        out += one;
        if (t.exponent != 1) {
            out += '^';
            if (t.exponent > 0 && boost::multiprecision::denominator(t.exponent) == 1) {
                out += format_rational(t.exponent);
            } else {
                out += '(';
                out += format_rational(t.exponent);
                out += ')';
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GrossNumber& x)
{
    return os << format_numeral(x);
}

} // namespace gross
