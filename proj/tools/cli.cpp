#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gross/gross.hpp"

namespace gross::cli {

namespace {

using nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kSyntaxError = 2;

struct UsageError {
    std::string message;
    OutputFormat format;
};

// Recovers --format before CLI11 has run, for error envelopes.
OutputFormat sniff_format(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") || args[i] == "--format=json") {
            return OutputFormat::Json;
        }
    }
    return OutputFormat::Text;
}

// CLI11 reads words such as "-①", "-G1" or "-(1)" as short options. They are
// swapped for placeholders while parsing and restored afterwards.
constexpr char kPlaceholder = '\x01';

bool is_negative_value(const std::string& word)
{
    return word.size() > 1 && word[0] == '-' && word[1] != '-' && word != "-h";
}

void restore(std::string& field, const std::vector<std::string>& args)
{
    if (!field.empty() && field[0] == kPlaceholder) {
        field = args.at(std::stoul(field.substr(1)));
    }
}

class Renderer {
public:
    explicit Renderer(const Command& cmd) : cmd_(cmd), glyph_(cmd.ascii ? Glyph::Ascii : Glyph::Unicode) {}

    Glyph glyph() const { return glyph_; }
    bool json_mode() const { return cmd_.format == OutputFormat::Json; }

    std::string numeral(const GrossNumber& x) const { return format_numeral(x, glyph_); }

    Outcome success(const json& result, const std::string& text) const
    {
        if (json_mode()) {
            return {0, json{{"result", result}}.dump() + "\n", {}};
        }
        return {0, text.ends_with('\n') ? text : text + "\n", {}};
    }

private:
    const Command& cmd_;
    Glyph glyph_;
};

json class_json(const GrossNumber& x)
{
    const NumberClass c = classify(x);
    return {{"integer", c.is_integer},
            {"finite", c.is_finite},
            {"infinite", c.is_infinite},
            {"infinitesimal", c.is_infinitesimal}};
}

std::string ordering_name(std::partial_ordering o)
{
    if (o == std::partial_ordering::less) {
        return "Negative";
    }
    if (o == std::partial_ordering::greater) {
        return "Positive";
    }
    if (o == std::partial_ordering::equivalent) {
        return "Zero";
    }
    return "Incomparable";
}

bool looks_defined(const std::string& text)
{
    return text.starts_with("sqrtfloor") || text.starts_with("logfloor") || text.starts_with("invfloor");
}

const std::string& single_arg(const Command& cmd, const char* what)
{
    if (cmd.args.size() != 1) {
        throw UsageError{std::string("expected exactly one ") + what, cmd.format};
    }
    return cmd.args.front();
}

json measurement_json(const Measurement& m, Glyph glyph) { return json::parse(measurement_to_json(m, glyph)); }

Outcome run_eval(const Command& cmd, const Renderer& r)
{
    const GrossNumber x = evaluate_expression(single_arg(cmd, "expression"));
    if (r.json_mode()) {
        return {0, json{{"result", r.numeral(x)}, {"class", class_json(x)}}.dump() + "\n", {}};
    }
    return r.success(r.numeral(x), r.numeral(x));
}

Outcome run_card(const Command& cmd, const Renderer& r)
{
    const GrossNumber n = cardinality(parse_set_expression(single_arg(cmd, "set expression")));
    return r.success(r.numeral(n), r.numeral(n));
}

Outcome run_cmp(const Command& cmd, const Renderer& r)
{
    if (cmd.args.size() != 2) {
        throw UsageError{"cmp expects two operands", cmd.format};
    }
    std::string verdict;
    if (looks_defined(cmd.args[0])) {
        verdict = ordering_name(cmp_defined(parse_defined(cmd.args[0]), evaluate_expression(cmd.args[1])));
    } else if (looks_defined(cmd.args[1])) {
        const auto o = cmp_defined(parse_defined(cmd.args[1]), evaluate_expression(cmd.args[0]));
        verdict = ordering_name(0 <=> o);
    } else {
        verdict = std::string(sign_name(cmp(evaluate_expression(cmd.args[0]), evaluate_expression(cmd.args[1]))));
    }
    return r.success(verdict, verdict);
}

Outcome run_measure(const Command& cmd, const Renderer& r)
{
    const IntervalSet s = parse_set_expression(single_arg(cmd, "set expression"));
    const Measurement m = cmd.system ? measure_in(parse_system(*cmd.system), s) : canonical_measurement(s);
    return r.success(measurement_json(m, r.glyph()), measurement_to_text(m, r.glyph()));
}

Outcome run_system(const Command& cmd, const Renderer& r)
{
    const NumeralSystem sys = parse_system(single_arg(cmd, "system descriptor"));
    if (cmd.expressible) {
        const bool yes = expressible(sys, evaluate_expression(*cmd.expressible));
        return r.success(yes, yes ? "true" : "false");
    }
    const GrossNumber phi = max_finite(sys);
    std::optional<GrossNumber> psi;
    try {
        psi = min_infinite(sys);
    } catch (const Error& e) {
        if (e.code() != Errc::NoInfiniteNumerals) {
            throw;
        }
    }
    json result = {{"system", describe(sys)}, {"phi", r.numeral(phi)}, {"psi", nullptr}};
    std::string text = "system " + describe(sys) + "\nphi " + r.numeral(phi) + "\n";
    if (psi) {
        result["psi"] = r.numeral(*psi);
        text += "psi " + r.numeral(*psi) + "\n";
    } else {
        text += "psi none (NoInfiniteNumerals)\n";
    }
    return r.success(result, text);
}

Outcome run_define(const Command& cmd, const Renderer& r)
{
    const DefinedNumeral d = parse_defined(single_arg(cmd, "definition"));
    if (cmd.probe) {
        const std::string verdict = ordering_name(cmp_defined(d, evaluate_expression(*cmd.probe)));
        return r.success(verdict, verdict);
    }
    const std::string name = format_defined(d, r.glyph());
    json result = {{"defined", name}, {"value", nullptr}};
    std::string text = name;
    if (is_finite(d.kappa)) {
        const GrossNumber v = resolve_finite(d);
        result["value"] = r.numeral(v);
        text += " = " + r.numeral(v);
    }
    return r.success(result, text);
}

Rational finite_rational(const std::string& text, const char* flag)
{
    const GrossNumber x = evaluate_expression(text);
    if (!x.is_rational()) {
        throw Error(Errc::InvalidArgument, std::string(flag) + " must be a finite rational, got " + format_numeral(x));
    }
    return x.to_rational();
}

Outcome run_demo(const Command& cmd, const Renderer& r)
{
    if (single_arg(cmd, "demo name") != "halfplane") {
        throw UsageError{"unknown demo '" + cmd.args.front() + "' (available: halfplane)", cmd.format};
    }
    const HalfPlaneDemo demo = run_halfplane_demo(finite_rational(cmd.a, "--a"), finite_rational(cmd.d, "--d"),
                                                  evaluate_expression(cmd.b), evaluate_expression(cmd.c));
    const Glyph g = r.glyph();
    const GrossNumber total = demo.uncovered.total();
    const std::string extent_kind = is_infinite(total) ? "infinite" : "finite";
    const auto strip_json = [&](const Strip& s) {
        return json{{"x", {r.numeral(s.x.lo), r.numeral(s.x.hi)}}, {"y", {r.numeral(s.y.lo), r.numeral(s.y.hi)}}};
    };
    const auto bound_json = [](const classical::Bound& b) -> std::string {
        switch (b.kind) {
        case classical::Bound::Kind::NegInfinity: return "-inf";
        case classical::Bound::Kind::PosInfinity: return "+inf";
        default: return format_rational(b.value);
        }
    };
    const auto classical_json = [&](const classical::Strip& s) {
        return json{{"x", {bound_json(s.x.lo), bound_json(s.x.hi)}}, {"y", {bound_json(s.y.lo), bound_json(s.y.hi)}}};
    };
    json result = {
        {"A", strip_json(demo.a_strip)},
        {"C", strip_json(demo.c_strip)},
        {"B", strip_json(demo.b_strip)},
        {"subset", demo.b_within_a},
        {"uncovered",
         {{"left", r.numeral(demo.uncovered.left)},
          {"right", r.numeral(demo.uncovered.right)},
          {"total", r.numeral(total)},
          {"kind", extent_kind}}},
        {"classical",
         {{"A", classical_json(demo.classical_a)},
          {"C", classical_json(demo.classical_c)},
          {"B", classical_json(demo.classical_b)},
          {"subset", demo.classical_b_within_a}}},
    };
    std::string text;
    text += "A = " + format_strip(demo.a_strip, g) + "\n";
    text += "C = " + format_strip(demo.c_strip, g) + "\n";
    text += "B = " + format_strip(demo.b_strip, g) + "\n";
    text += std::string("B subset of A: ") + (demo.b_within_a ? "true" : "false") + "\n";
    text += "uncovered extent: left " + r.numeral(demo.uncovered.left) + ", right " +
            r.numeral(demo.uncovered.right) + ", total " + r.numeral(total) + " (" + extent_kind + ")\n";
    text += "classical A = " + classical::format(demo.classical_a, g) + "\n";
    text += "classical C = " + classical::format(demo.classical_c, g) + "\n";
    text += "classical B = " + classical::format(demo.classical_b, g) + "\n";
    text += std::string("classical B subset of A: ") + (demo.classical_b_within_a ? "true" : "false") + "\n";
    return r.success(result, text);
}

Outcome failure(OutputFormat format, int code, std::string_view name, const std::string& message)
{
    if (format == OutputFormat::Json) {
        return {code, json{{"error", {{"name", name}, {"message", message}}}}.dump() + "\n", {}};
    }
    return {code, {}, "error: " + message + "\n"};
}

} // namespace

Outcome run(const Command& cmd)
{
    const Renderer r(cmd);
    try {
        switch (cmd.verb) {
        case Verb::Eval: return run_eval(cmd, r);
        case Verb::Card: return run_card(cmd, r);
        case Verb::Cmp: return run_cmp(cmd, r);
        case Verb::Measure: return run_measure(cmd, r);
        case Verb::System: return run_system(cmd, r);
        case Verb::Define: return run_define(cmd, r);
        case Verb::Demo: return run_demo(cmd, r);
        }
    } catch (const SyntaxError& e) {
        return failure(cmd.format, kSyntaxError, e.name(), e.what());
    } catch (const Error& e) {
        return failure(cmd.format, kDomainError, e.name(), e.what());
    } catch (const UsageError& e) {
        return failure(cmd.format, kSyntaxError, "UsageError", e.message);
    }
    return failure(cmd.format, kSyntaxError, "UsageError", "no verb");
}

Outcome run_args(const std::vector<std::string>& args)
{
    Command cmd;
    CLI::App app{"Exact grossone arithmetic, interval sets and measurements", "grossone"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cmd.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}}));
    app.add_flag("--ascii", cmd.ascii, "Write G1 instead of the grossone glyph");

    // Positionals bind to plain strings: CLI11 would read "[..]" as a list.
    std::string first;
    std::string second;
    auto* eval = app.add_subcommand("eval", "Evaluate a numeral expression to canonical form");
    eval->add_option("expression", first)->required();
    auto* card = app.add_subcommand("card", "Number of elements of a set expression");
    card->add_option("set", first)->required();
    auto* compare = app.add_subcommand("cmp", "Compare two numerals (either may be a defined numeral)");
    compare->add_option("lhs", first)->required();
    compare->add_option("rhs", second)->required();
    auto* measure = app.add_subcommand("measure", "Canonical measurement of a set expression");
    measure->add_option("set", first)->required();
    measure->add_option("--system", cmd.system, "Numeral system the measurement must be written in");
    auto* system = app.add_subcommand("system", "Query a numeral system (phi_S, psi_S, expressibility)");
    system->add_option("descriptor", first)->required();
    system->add_option("--expressible", cmd.expressible, "Numeral to test for expressibility");
    auto* define = app.add_subcommand("define", "Introduce sqrtfloor/logfloor/invfloor numerals");
    define->add_option("definition", first)->required();
    define->add_option("--probe", cmd.probe, "Positive integer to compare the defined numeral against");
    auto* demo = app.add_subcommand("demo", "Run a worked example (halfplane)");
    demo->add_option("name", first)->required();
    demo->add_option("--a", cmd.a, "Abscissa of the border line (finite rational)")->required();
    demo->add_option("--d", cmd.d, "Abscissa of the second line (finite rational)")->required();
    demo->add_option("--b", cmd.b, "Left bound of A (gross numeral)");
    demo->add_option("--c", cmd.c, "Half-height of the strips (gross numeral)");

    const std::vector<std::pair<CLI::App*, Verb>> verbs = {
        {eval, Verb::Eval},       {card, Verb::Card},     {compare, Verb::Cmp}, {measure, Verb::Measure},
        {system, Verb::System}, {define, Verb::Define}, {demo, Verb::Demo},
    };

    std::vector<std::string> words;
    for (std::size_t i = 0; i < args.size(); ++i) {
        words.push_back(is_negative_value(args[i]) ? kPlaceholder + std::to_string(i) : args[i]);
    }
    std::vector<const char*> argv{"grossone"};
    for (const auto& w : words) {
        argv.push_back(w.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), {}};
    } catch (const CLI::ParseError& e) {
        return failure(sniff_format(args), kSyntaxError, "UsageError", e.what());
    }
    for (const auto& [sub, verb] : verbs) {
        if (sub->parsed()) {
            cmd.verb = verb;
        }
    }
    for (std::string* field : {&first, &second, &cmd.a, &cmd.b, &cmd.c, &cmd.d}) {
        restore(*field, args);
    }
    for (auto* field : {&cmd.system, &cmd.expressible, &cmd.probe}) {
        if (*field) {
            restore(**field, args);
        }
    }
    cmd.args = {first};
    if (cmd.verb == Verb::Cmp) {
        cmd.args.push_back(second);
    }
    return run(cmd);
}

} // namespace gross::cli
