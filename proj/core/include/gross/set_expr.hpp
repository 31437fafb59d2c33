#pragma once

#include <string_view>

#include "gross/sets.hpp"

namespace gross {

/// Evaluates a set expression.
///
///   expr   := term (('|' | '\') term)*
///   term   := factor ('&' factor)*
///   factor := '[' numeral '..' numeral ']'
///           | '{' [numeral (',' numeral)*] '}'
///           | '(' expr ')'
///           | 'iota(' expr ',' numeral ')'
///           | 'reflect(' expr ',' numeral ')'
///           | 'hull(' expr ')'
///           | 'segments(' numeral ')'       -- union of S_n for n ≤ κ
///
/// Throws SyntaxError, or the sets module's errors for bad endpoints.
IntervalSet parse_set_expression(std::string_view text);

} // namespace gross
