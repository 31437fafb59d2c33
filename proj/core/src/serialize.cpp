#include "gross/serialize.hpp"

#include <cctype>
#include <sstream>

#include "gross/error.hpp"
#include "gross/set_expr.hpp"
#include <nlohmann/json.hpp>

namespace gross {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

std::string measurement_to_text(const Measurement& m, Glyph glyph)
{
    std::string out = "mu " + format_numeral(m.mu(), glyph) + "\n";
    out += "target " + format_set(m.target(), glyph) + "\n";
    for (const auto& p : m.pieces()) {
        out += "piece " + format_numeral(p.domain.lo, glyph) + " " + format_numeral(p.domain.hi, glyph) + " " +
               format_numeral(p.offset, glyph) + "\n";
    }
    return out;
}

Measurement measurement_from_text(std::string_view text)
{
    std::optional<GrossNumber> mu;
    std::optional<IntervalSet> target;
    std::vector<AffinePiece> pieces;
    std::size_t offset = 0;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = trim(text.substr(offset, end - offset));
        const std::size_t line_start = offset;
        offset = end + 1;
        if (line.empty()) {
            continue;
        }
        const std::size_t space = line.find(' ');
        const std::string_view key = line.substr(0, space);
        const std::string_view value = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
        if (key == "mu") {
            mu = parse_numeral(value);
        } else if (key == "target") {
            target = parse_set_expression(value);
        } else if (key == "piece") {
            std::istringstream fields{std::string(value)};
            std::string lo;
            std::string hi;
            std::string shift;
            std::string extra;
            if (!(fields >> lo >> hi >> shift) || (fields >> extra)) {
                throw SyntaxError(line_start, "piece needs exactly three numerals");
            }
            pieces.push_back({{parse_numeral(lo), parse_numeral(hi)}, parse_numeral(shift)});
        } else {
            throw SyntaxError(line_start, "unknown record '" + std::string(key) + "'");
        }
    }
    if (!mu || !target) {
        throw SyntaxError(text.size(), "missing mu or target record");
    }
    return Measurement::make(std::move(*mu), std::move(pieces), std::move(*target));
}

std::string measurement_to_json(const Measurement& m, Glyph glyph, int indent)
{
    json target = json::array();
    for (const auto& part : m.target().parts()) {
        target.push_back({format_numeral(part.lo, glyph), format_numeral(part.hi, glyph)});
    }
    json pieces = json::array();
    for (const auto& p : m.pieces()) {
        pieces.push_back({{"lo", format_numeral(p.domain.lo, glyph)},
                          {"hi", format_numeral(p.domain.hi, glyph)},
                          {"offset", format_numeral(p.offset, glyph)}});
    }
    json doc = {{"mu", format_numeral(m.mu(), glyph)}, {"target", target}, {"pieces", pieces}};
    return doc.dump(indent);
}

Measurement measurement_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.byte, e.what());
    }
    try {
        std::vector<GrossInterval> target;
        for (const auto& part : doc.at("target")) {
            target.push_back(make_interval(parse_numeral(part.at(0).get<std::string>()),
                                           parse_numeral(part.at(1).get<std::string>())));
        }
        std::vector<AffinePiece> pieces;
        for (const auto& p : doc.at("pieces")) {
            pieces.push_back({{parse_numeral(p.at("lo").get<std::string>()), parse_numeral(p.at("hi").get<std::string>())},
                              parse_numeral(p.at("offset").get<std::string>())});
        }
        return Measurement::make(parse_numeral(doc.at("mu").get<std::string>()), std::move(pieces),
                                 make_set(target));
    } catch (const json::exception& e) {
        throw SyntaxError(0, std::string("malformed measurement document: ") + e.what());
    }
}

} // namespace gross
