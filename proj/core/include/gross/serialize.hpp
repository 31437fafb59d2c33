#pragma once

#include <string>
#include <string_view>

#include "gross/measure.hpp"

namespace gross {

/// Line-based form, one record per line, numerals in canonical syntax:
///
///   mu ①-3
///   target [4..①]
///   piece 1 ①-3 3        (domain-lo domain-hi offset)
///
/// Pieces appear in domain order.
std::string measurement_to_text(const Measurement& m, Glyph glyph = Glyph::Unicode);
/// Throws SyntaxError for malformed records and NotABijection for records
/// that do not describe a measurement.
Measurement measurement_from_text(std::string_view text);

/// {"mu": "...", "target": [["lo","hi"], ...],
///  "pieces": [{"lo": "...", "hi": "...", "offset": "..."}, ...]}
std::string measurement_to_json(const Measurement& m, Glyph glyph = Glyph::Unicode, int indent = -1);
Measurement measurement_from_json(std::string_view text);

} // namespace gross
