#pragma once

#include <string_view>

#include "gross/gnum.hpp"

namespace gross {

/// Evaluates arithmetic over numerals:
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | primary ['^' natural]
///   primary := '(' expr ')' | numeral term
///
/// Numeral terms bind first, so "1/2①" is (1/2)·① and "①^2" is a single
/// term. '/' is div_exact. Throws SyntaxError, NotExact, DivideByZero.
GrossNumber evaluate_expression(std::string_view text);

} // namespace gross
