#include "gross/scanner.hpp"

#include <cctype>

#include "gross/error.hpp"

namespace gross {

namespace {

constexpr std::string_view kGrossoneGlyph = "\xE2\x91\xA0"; // ①
constexpr std::string_view kGrossoneAscii = "G1";
constexpr std::string_view kMinusSign = "\xE2\x88\x92"; // U+2212

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

} // namespace

void Scanner::skip_space() noexcept
{
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
    }
}

bool Scanner::at_end() noexcept
{
    skip_space();
    return pos_ >= text_.size();
}

bool Scanner::peek(std::string_view token) noexcept
{
    skip_space();
    return text_.substr(pos_).starts_with(token);
}

bool Scanner::accept(std::string_view token) noexcept
{
    if (!peek(token)) {
        return false;
    }
    pos_ += token.size();
    return true;
}

void Scanner::expect(std::string_view token)
{
    if (!accept(token)) {
        fail("expected '" + std::string(token) + "'");
    }
}

bool Scanner::peek_grossone() noexcept
{
    return peek(kGrossoneGlyph) || peek(kGrossoneAscii);
}

bool Scanner::accept_grossone() noexcept
{
    return accept(kGrossoneGlyph) || accept(kGrossoneAscii);
}

bool Scanner::accept_minus() noexcept
{
    return accept("-") || accept(kMinusSign);
}

bool Scanner::peek_digit() noexcept
{
    skip_space();
    return pos_ < text_.size() && is_digit(text_[pos_]);
}

std::optional<Rational> Scanner::accept_rational()
{
    if (!peek_digit()) {
        return std::nullopt;
    }
    auto digits = [this] {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            ++pos_;
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    };
    const Integer whole = digits();
    auto next_is_digit = [this] { return pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]); };

    if (pos_ < text_.size() && text_[pos_] == '.' && next_is_digit()) {
        ++pos_;
        const std::size_t start = pos_;
        const Integer frac = digits();
        Integer scale = 1;
        for (std::size_t i = start; i < pos_; ++i) {
            scale *= 10;
        }
        return Rational(whole * scale + frac, scale);
    }
    if (pos_ < text_.size() && text_[pos_] == '/' && next_is_digit()) {
        const std::size_t slash = pos_;
        ++pos_;
        const Integer den = digits();
        if (den == 0) {
            pos_ = slash;
            fail("zero denominator");
        }
        return Rational(whole, den);
    }
    return Rational(whole);
}

std::string Scanner::accept_identifier()
{
    skip_space();
    const std::size_t start = pos_;
    auto ident_char = [](char c, bool first) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (!first && is_digit(c));
    };
    if (pos_ < text_.size() && ident_char(text_[pos_], true)) {
        // "G1" is the grossone, not an identifier.
        if (text_.substr(pos_).starts_with(kGrossoneAscii) &&
            (pos_ + 2 >= text_.size() || !ident_char(text_[pos_ + 2], false))) {
            return {};
        }
        ++pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_], false)) {
            ++pos_;
        }
    }
    return std::string(text_.substr(start, pos_ - start));
}

void Scanner::fail(std::string detail) const
{
    throw SyntaxError(pos_, std::move(detail));
}

Rational Scanner::grossone_exponent()
{
    if (!accept("^")) {
        return 1;
    }
    const bool paren = accept("(");
    const bool negative = accept_minus();
    auto value = accept_rational();
    if (!value) {
        fail("expected exponent");
    }
    if (paren) {
        expect(")");
    }
    return negative ? Rational(-*value) : *value;
}

GrossNumber Scanner::numeral_term()
{
    if (accept_grossone()) {
        return GrossNumber::monomial(grossone_exponent());
    }
    auto coefficient = accept_rational();
    if (!coefficient) {
        fail("expected numeral term");
    }
    const std::size_t mark = pos_;
    const bool star = accept("*");
    if (accept_grossone()) {
        return GrossNumber::monomial(grossone_exponent(), *coefficient);
    }
    if (star) {
        rewind(mark);
    }
    return GrossNumber(*coefficient);
}

GrossNumber Scanner::numeral()
{
    GrossNumber sum;
    bool first = true;
    for (;;) {
        bool negative = false;
        if (accept_minus()) {
            negative = true;
        } else if (!accept("+") && !first) {
            break;
        }
        GrossNumber t = numeral_term();
        sum += negative ? -t : t;
        first = false;
    }
    return sum;
}

} // namespace gross
