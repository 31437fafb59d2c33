#include "gross/set_expr.hpp"

#include "gross/error.hpp"
#include "gross/scanner.hpp"

namespace gross {

namespace {

class SetParser {
public:
    explicit SetParser(std::string_view text) : scan_(text) {}

    IntervalSet parse()
    {
        if (scan_.at_end()) {
            scan_.fail("empty set expression");
        }
        IntervalSet s = expr();
        if (!scan_.at_end()) {
            scan_.fail("unexpected trailing input");
        }
        return s;
    }

private:
    IntervalSet expr()
    {
        IntervalSet acc = term();
        for (;;) {
            if (scan_.accept("|")) {
                acc = set_union(acc, term());
            } else if (scan_.accept("\\")) {
                acc = set_difference(acc, term());
            } else {
                return acc;
            }
        }
    }

    IntervalSet term()
    {
        IntervalSet acc = factor();
        while (scan_.accept("&")) {
            acc = set_intersection(acc, factor());
        }
        return acc;
    }

    GrossNumber numeral()
    {
        scan_.skip_space();
        return scan_.numeral();
    }

    IntervalSet factor()
    {
        if (scan_.accept("[")) {
            GrossNumber lo = numeral();
            scan_.expect("..");
            GrossNumber hi = numeral();
            scan_.expect("]");
            return range(lo, hi);
        }
        if (scan_.accept("{")) {
            std::vector<GrossInterval> points;
            if (!scan_.accept("}")) {
                do {
                    GrossNumber x = numeral();
                    points.push_back(make_interval(x, x));
                } while (scan_.accept(","));
                scan_.expect("}");
            }
            return make_set(points);
        }
        if (scan_.accept("(")) {
            IntervalSet s = expr();
            scan_.expect(")");
            return s;
        }
        const std::size_t at = scan_.position();
        const std::string name = scan_.accept_identifier();
        if (name.empty()) {
            scan_.fail("expected set");
        }
        scan_.expect("(");
        IntervalSet result;
        if (name == "iota") {
            IntervalSet s = expr();
            scan_.expect(",");
            result = iota(s, numeral());
        } else if (name == "reflect") {
            IntervalSet s = expr();
            scan_.expect(",");
            result = map_affine(s, Orientation::Reversing, numeral() * 2);
        } else if (name == "hull") {
            result = IntervalSet(convex_hull(expr()));
        } else if (name == "segments") {
            result = union_initial_segments(numeral());
        } else {
            scan_.rewind(at);
            scan_.fail("unknown set function '" + name + "'");
        }
        scan_.expect(")");
        return result;
    }

    Scanner scan_;
};

} // namespace

IntervalSet parse_set_expression(std::string_view text)
{
    return SetParser(text).parse();
}

} // namespace gross
