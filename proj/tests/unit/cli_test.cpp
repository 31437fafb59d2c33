#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "cli.hpp"

namespace gross::cli {
namespace {

Outcome run_words(std::initializer_list<std::string> words) { return run_args(std::vector<std::string>(words)); }

TEST(Cli, Card)
{
    const Outcome o = run_words({"card", "[-①..①]"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.out, "2①+1\n");
    EXPECT_EQ(run_words({"card", "segments(①)"}).out, "①-1\n");
    EXPECT_EQ(run_words({"--ascii", "card", "[-G1..G1] | [2G1..3G1]"}).out, "3G1+2\n");
    EXPECT_EQ(run_words({"--format", "json", "card", "[1..3] | [5..9]"}).out, "{\"result\":\"8\"}\n");
}

TEST(Cli, Eval)
{
    EXPECT_EQ(run_words({"eval", "(①+1)*(①-1)"}).out, "①^2-1\n");
    const Outcome bad = run_words({"eval", "(①+1)/①"});
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_NE(bad.err.find("NotExact"), std::string::npos);
    const Outcome syntax = run_words({"eval", "2①+"});
    EXPECT_EQ(syntax.exit_code, 2);
    EXPECT_NE(syntax.err.find("SyntaxError"), std::string::npos);
}

TEST(Cli, Cmp)
{
    EXPECT_EQ(run_words({"cmp", "①", "1000"}).out, "Positive\n");
    EXPECT_EQ(run_words({"cmp", "[2..①-1]", "①"}).exit_code, 2);
    EXPECT_EQ(run_words({"cmp", "sqrtfloor(①)", "①"}).out, "Negative\n");
    EXPECT_EQ(run_words({"cmp", "①", "sqrtfloor(①)"}).out, "Positive\n");
    EXPECT_EQ(run_words({"cmp", "logfloor(10,①)", "①"}).out, "Incomparable\n");
}

TEST(Cli, Measure)
{
    const Outcome o = run_words({"measure", "[4..①] | [1..2]"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.out, "mu ①-1\ntarget [1..2] | [4..①]\npiece 1 2 0\npiece 3 ①-1 1\n");
    const Outcome piraha = run_words({"measure", "{1,2,3}", "--system", "piraha"});
    EXPECT_EQ(piraha.exit_code, 1);
    EXPECT_EQ(piraha.err, "error: NotExpressible(3)\n");
    const Outcome json = run_words({"--format", "json", "measure", "{1,2,3}", "--system", "piraha"});
    EXPECT_EQ(json.exit_code, 1);
    EXPECT_EQ(json.out, "{\"error\":{\"message\":\"NotExpressible(3)\",\"name\":\"NotExpressible\"}}\n");
    EXPECT_EQ(run_words({"--format", "json", "measure", "{1,2}", "--system", "piraha"}).out,
              "{\"result\":{\"mu\":\"2\",\"pieces\":[{\"hi\":\"2\",\"lo\":\"1\",\"offset\":\"0\"}],\"target\":[[\"1\",\"2\"]]}}\n");
}

TEST(Cli, System)
{
    EXPECT_EQ(run_words({"--format", "json", "system", "gross:2:1:1"}).out,
              "{\"result\":{\"phi\":\"9\",\"psi\":\"1/9①-9\",\"system\":\"gross:2:1:1\"}}\n");
    EXPECT_EQ(run_words({"system", "finite:2:10", "--expressible", "100"}).out, "false\n");
    EXPECT_EQ(run_words({"system", "finite:2:10", "--expressible", "99"}).out, "true\n");
    EXPECT_EQ(run_words({"system", "bogus"}).exit_code, 2);
}

TEST(Cli, Define)
{
    EXPECT_EQ(run_words({"define", "sqrtfloor(100)"}).out, "sqrtfloor(100) = 10\n");
    EXPECT_EQ(run_words({"define", "sqrtfloor(①)", "--probe", "1000000"}).out, "Positive\n");
    EXPECT_EQ(run_words({"--format", "json", "define", "sqrtfloor(①)"}).out,
              "{\"result\":{\"defined\":\"sqrtfloor(①)\",\"value\":null}}\n");
}

TEST(Cli, Demo)
{
    const Outcome o = run_words({"demo", "halfplane", "--a", "1", "--d", "0"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_NE(o.out.find("C = [1, ①+2]×[-①, ①]\n"), std::string::npos);
    EXPECT_NE(o.out.find("B = [-①-2, -1]×[-①, ①]\n"), std::string::npos);
    EXPECT_NE(o.out.find("B subset of A: false\n"), std::string::npos);
    EXPECT_NE(o.out.find("uncovered extent: left 2, right 0, total 2 (finite)\n"), std::string::npos);
    EXPECT_NE(o.out.find("classical B subset of A: true\n"), std::string::npos);
    EXPECT_EQ(run_words({"demo", "halfplane", "--a", "①", "--d", "0"}).exit_code, 1);
    EXPECT_EQ(run_words({"demo", "spiral", "--a", "1", "--d", "0"}).exit_code, 2);
}

TEST(Cli, NegativeValues)
{
    EXPECT_EQ(run_words({"eval", "-①"}).out, "-①\n");
    EXPECT_EQ(run_words({"eval", "-G1^2+3"}).out, "-①^2+3\n");
    EXPECT_EQ(run_words({"cmp", "-(①+1)", "-1"}).out, "Negative\n");
    EXPECT_EQ(run_words({"system", "gross:1:1:1", "--expressible", "-①"}).out, "true\n");
    const Outcome demo = run_words({"demo", "halfplane", "--a", "-1", "--d", "-3", "--b", "①"});
    EXPECT_EQ(demo.exit_code, 0);
    EXPECT_NE(demo.out.find("uncovered extent: left 4"), std::string::npos);
    EXPECT_EQ(run_words({"-x", "eval", "1"}).exit_code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_words({}).exit_code, 2);
    EXPECT_EQ(run_words({"--bogus", "card", "[1..2]"}).exit_code, 2);
    EXPECT_EQ(run_words({"card"}).exit_code, 2);
    const Outcome json = run_words({"--format", "json", "frobnicate"});
    EXPECT_EQ(json.exit_code, 2);
    EXPECT_NE(json.out.find("\"name\":\"UsageError\""), std::string::npos);
    EXPECT_EQ(run_words({"--help"}).exit_code, 0);
}

TEST(Cli, Deterministic)
{
    for (const auto& words : std::vector<std::vector<std::string>>{
             {"card", "[1..①] \\ {5,7}"},
             {"--format", "json", "demo", "halfplane", "--a", "3/2", "--d", "-1", "--b", "①^2"},
             {"--format", "json", "measure", "[1..3] | [①-2..①]"}}) {
        const Outcome first = run_args(words);
        const Outcome second = run_args(words);
        EXPECT_EQ(first.out, second.out);
        EXPECT_EQ(first.err, second.err);
        EXPECT_EQ(first.exit_code, second.exit_code);
    }
}

TEST(Cli, ExecutableExitCodes)
{
    const auto status_of = [](const std::string& args) {
        const std::string command = std::string(GROSSONE_BIN) + " " + args + " >/dev/null 2>&1";
        const int raw = std::system(command.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status_of("card '[-①..①]'"), 0);
    EXPECT_EQ(status_of("measure '{1,2,3}' --system piraha"), 1);
    EXPECT_EQ(status_of("eval '2①+'"), 2);
}

} // namespace
} // namespace gross::cli
