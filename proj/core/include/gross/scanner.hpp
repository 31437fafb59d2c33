#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gross/gnum.hpp"

namespace gross {

/// Cursor over numeral and set-expression text. Shared by every parser in
/// the project so that positions in SyntaxError refer to the same bytes.
///
/// All `accept*` members skip leading whitespace, consume on success and
/// leave the cursor untouched on failure.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t position() const noexcept { return pos_; }
    void rewind(std::size_t pos) noexcept { pos_ = pos; }
    std::string_view rest() const noexcept { return text_.substr(pos_); }

    void skip_space() noexcept;
    bool at_end() noexcept;

    bool peek(std::string_view token) noexcept;
    bool accept(std::string_view token) noexcept;
    void expect(std::string_view token);

    /// "①" or the ASCII spelling "G1".
    bool accept_grossone() noexcept;
    bool peek_grossone() noexcept;
    /// '-' or U+2212 MINUS SIGN.
    bool accept_minus() noexcept;
    bool peek_digit() noexcept;

    /// Unsigned rational literal: integer, integer/integer, or decimal.
    std::optional<Rational> accept_rational();
    /// [A-Za-z_][A-Za-z0-9_]*, empty when none.
    std::string accept_identifier();

    /// Signed sum of terms per the numeral grammar. Stops at the first byte
    /// that cannot continue the sum.
    GrossNumber numeral();
    /// One unsigned term: rational, rational·①^p, or ①^p.
    GrossNumber numeral_term();

    [[noreturn]] void fail(std::string detail) const;

private:
    Rational grossone_exponent();

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace gross
