#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gross::cli {

enum class Verb { Eval, Card, Cmp, Measure, System, Define, Demo };
enum class OutputFormat { Text, Json };

struct Command {
    Verb verb = Verb::Eval;
    std::vector<std::string> args;
    OutputFormat format = OutputFormat::Text;
    bool ascii = false;

    std::optional<std::string> system;      // measure --system
    std::optional<std::string> expressible; // system --expressible
    std::optional<std::string> probe;       // define --probe
    std::string a;                          // demo --a
    std::string d;                          // demo --d
    std::string b = "\xE2\x91\xA0";         // demo --b
    std::string c = "\xE2\x91\xA0";         // demo --c
};

/// Rendered result of one invocation. Exit codes: 0 success, 1 domain
/// error, 2 syntax or usage error.
struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Command-line words after the program name.
Outcome run_args(const std::vector<std::string>& args);

Outcome run(const Command& command);

} // namespace gross::cli
