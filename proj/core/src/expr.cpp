#include "gross/expr.hpp"

#include "gross/error.hpp"
#include "gross/scanner.hpp"

namespace gross {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : scan_(text) {}

    GrossNumber parse()
    {
        if (scan_.at_end()) {
            scan_.fail("empty expression");
        }
        GrossNumber x = expr();
        if (!scan_.at_end()) {
            scan_.fail("unexpected trailing input");
        }
        return x;
    }

private:
    GrossNumber expr()
    {
        GrossNumber acc;
        if (scan_.accept_minus()) {
            acc = -term();
        } else {
            scan_.accept("+");
            acc = term();
        }
        for (;;) {
            if (scan_.accept_minus()) {
                acc -= term();
            } else if (scan_.accept("+")) {
                acc += term();
            } else {
                return acc;
            }
        }
    }

    GrossNumber term()
    {
        GrossNumber acc = factor();
        for (;;) {
            if (scan_.accept("*")) {
                acc *= factor();
            } else if (scan_.accept("/")) {
                acc = div_exact(acc, factor());
            } else {
                return acc;
            }
        }
    }

    GrossNumber factor()
    {
        if (scan_.accept_minus()) {
            return -factor();
        }
        GrossNumber base;
        if (scan_.accept("(")) {
            base = expr();
            scan_.expect(")");
        } else if (scan_.peek_digit() || scan_.peek_grossone()) {
            base = scan_.numeral_term();
        } else {
            scan_.fail("expected a numeral or '('");
        }
        if (scan_.accept("^")) {
            const std::size_t at = scan_.position();
            auto exponent = scan_.accept_rational();
            if (!exponent || boost::multiprecision::denominator(*exponent) != 1 || *exponent > 4096) {
                scan_.rewind(at);
                scan_.fail("expected a natural exponent no larger than 4096");
            }
            base = pow(base, boost::multiprecision::numerator(*exponent).convert_to<unsigned>());
        }
        return base;
    }

    Scanner scan_;
};

} // namespace

GrossNumber evaluate_expression(std::string_view text)
{
    return ExprParser(text).parse();
}

} // namespace gross
