#include "gross/derived.hpp"

#include "gross/error.hpp"
#include "gross/scanner.hpp"

namespace gross {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::optional<Integer> as_natural(const GrossNumber& x)
{
    if (!x.is_rational()) {
        return std::nullopt;
    }
    const Rational v = x.to_rational();
    if (boost::multiprecision::denominator(v) != 1 || v < 0) {
        return std::nullopt;
    }
    return boost::multiprecision::numerator(v);
}

void require_positive_integer(const GrossNumber& x, const char* what)
{
    if (!is_integer(x) || x.sign() != Sign::Positive) {
        throw Error(Errc::InvalidArgument, std::string(what) + " must be a positive integer, got " + format_numeral(x));
    }
}

} // namespace

MonotoneFn MonotoneFn::pow(unsigned k)
{
    if (k < 2) {
        throw Error(Errc::InvalidArgument, "pow needs k >= 2");
    }
    return MonotoneFn(Pow{k});
}

MonotoneFn MonotoneFn::exp_base(unsigned base)
{
    if (base < 2) {
        throw Error(Errc::InvalidArgument, "exp needs base >= 2");
    }
    return MonotoneFn(ExpBase{base});
}

MonotoneFn MonotoneFn::affine(Rational slope, Rational intercept)
{
    if (slope <= 0) {
        throw Error(Errc::InvalidArgument, "affine needs a positive slope");
    }
    return MonotoneFn(Affine{std::move(slope), std::move(intercept)});
}

std::optional<GrossNumber> MonotoneFn::evaluate(const GrossNumber& x) const
{
    return std::visit(overloaded{
                          [&](const Pow& p) -> std::optional<GrossNumber> { return gross::pow(x, p.k); },
                          [&](const Affine& a) -> std::optional<GrossNumber> {
                              return GrossNumber(a.slope) * x + GrossNumber(a.intercept);
                          },
                          [&](const ExpBase& e) -> std::optional<GrossNumber> {
                              auto n = as_natural(x);
                              if (!n) {
                                  return std::nullopt;
                              }
                              Integer value = 1;
                              for (Integer i = 0; i < *n; ++i) {
                                  value *= e.base;
                              }
                              return GrossNumber(value);
                          },
                      },
                      kind_);
}

std::optional<Sign> MonotoneFn::compare_at(const GrossNumber& x, const GrossNumber& kappa) const
{
    if (const auto* e = std::get_if<ExpBase>(&kind_)) {
        auto n = as_natural(x);
        if (!n) {
            return std::nullopt;
        }
        // b^n is finite: an infinite κ decides by its sign alone.
        if (is_infinite(kappa)) {
            return kappa.sign() == Sign::Positive ? Sign::Negative : Sign::Positive;
        }
        const Rational ceiling = kappa.coefficient(0) + 1;
        Integer value = 1;
        for (Integer i = 0; i < *n; ++i) {
            value *= e->base;
            if (value > ceiling) {
                return Sign::Positive;
            }
        }
        return cmp(GrossNumber(value), kappa);
    }
    return cmp(*evaluate(x), kappa);
}

DefinedNumeral define_by_inverse(const MonotoneFn& g, const GrossNumber& kappa)
{
    require_positive_integer(kappa, "kappa");
    if (g.compare_at(1, kappa) == Sign::Positive) {
        throw Error(Errc::BelowRange, format_numeral(kappa) + " < g(1) for " + format_fn(g));
    }
    return {g, kappa};
}

GrossNumber resolve_finite(const DefinedNumeral& d)
{
    if (!is_finite(d.kappa)) {
        throw Error(Errc::NotFinite, format_numeral(d.kappa));
    }
    auto above = [&](const Integer& x) { return d.g.compare_at(GrossNumber(x), d.kappa) == Sign::Positive; };
    // Invariant: g(lo) ≤ κ < g(hi).
    Integer lo = 1;
    Integer hi = 2;
    while (!above(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const Integer mid = (lo + hi) / 2;
        if (above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return GrossNumber(lo);
}

std::partial_ordering cmp_defined(const DefinedNumeral& d, const GrossNumber& y)
{
    require_positive_integer(y, "probe");
    const auto at_y = d.g.compare_at(y, d.kappa);
    if (!at_y) {
        return std::partial_ordering::unordered;
    }
    if (*at_y == Sign::Positive) {
        return std::partial_ordering::less;
    }
    const auto at_next = d.g.compare_at(y + 1, d.kappa);
    if (!at_next) {
        return std::partial_ordering::unordered;
    }
    return *at_next == Sign::Positive ? std::partial_ordering::equivalent : std::partial_ordering::greater;
}

std::optional<GrossNumber> increment_gap(const MonotoneFn& g, const GrossNumber& x)
{
    auto next = g.evaluate(x + 1);
    auto here = g.evaluate(x);
    if (!next || !here) {
        return std::nullopt;
    }
    return *next - *here;
}

const DefinedNumeral& DefinitionRegistry::define(const MonotoneFn& g, const GrossNumber& kappa)
{
    if (entries_.size() >= capacity_) {
        throw Error(Errc::BoundExceeded, "at most " + std::to_string(capacity_) + " definitions");
    }
    entries_.push_back(define_by_inverse(g, kappa));
    return entries_.back();
}

namespace {

unsigned small_unsigned(Scanner& scan)
{
    const std::size_t at = scan.position();
    auto v = scan.accept_rational();
    if (!v || boost::multiprecision::denominator(*v) != 1 || *v > 1'000'000) {
        scan.rewind(at);
        scan.fail("expected a small positive integer");
    }
    return boost::multiprecision::numerator(*v).convert_to<unsigned>();
}

Rational signed_rational(Scanner& scan)
{
    const bool negative = scan.accept_minus();
    auto v = scan.accept_rational();
    if (!v) {
        scan.fail("expected a rational");
    }
    return negative ? Rational(-*v) : *v;
}

} // namespace

DefinedNumeral parse_defined(std::string_view text)
{
    Scanner scan(text);
    const std::string name = scan.accept_identifier();
    if (name != "sqrtfloor" && name != "logfloor" && name != "invfloor") {
        scan.rewind(0);
        scan.fail("expected sqrtfloor(...), logfloor(...) or invfloor(...)");
    }
    scan.expect("(");
    std::optional<MonotoneFn> g;
    if (name == "sqrtfloor") {
        g = MonotoneFn::pow(2);
    } else if (name == "logfloor") {
        g = MonotoneFn::exp_base(small_unsigned(scan));
        scan.expect(",");
    } else {
        const std::size_t at = scan.position();
        const std::string family = scan.accept_identifier();
        if (family == "pow") {
            g = MonotoneFn::pow(small_unsigned(scan));
        } else if (family == "exp") {
            g = MonotoneFn::exp_base(small_unsigned(scan));
        } else if (family == "affine") {
            Rational slope = signed_rational(scan);
            g = MonotoneFn::affine(std::move(slope), signed_rational(scan));
        } else {
            scan.rewind(at);
            scan.fail("expected pow, exp or affine");
        }
        scan.expect(",");
    }
    scan.skip_space();
    GrossNumber kappa = scan.numeral();
    scan.expect(")");
    if (!scan.at_end()) {
        scan.fail("unexpected trailing input");
    }
    return define_by_inverse(*g, kappa);
}

std::string format_fn(const MonotoneFn& g)
{
    return std::visit(overloaded{
                          [](const MonotoneFn::Pow& p) { return "pow " + std::to_string(p.k); },
                          [](const MonotoneFn::ExpBase& e) { return "exp " + std::to_string(e.base); },
                          [](const MonotoneFn::Affine& a) {
                              return "affine " + format_rational(a.slope) + " " + format_rational(a.intercept);
                          },
                      },
                      g.kind());
}

std::string format_defined(const DefinedNumeral& d, Glyph glyph)
{
    const std::string kappa = format_numeral(d.kappa, glyph);
    if (const auto* p = std::get_if<MonotoneFn::Pow>(&d.g.kind()); p && p->k == 2) {
        return "sqrtfloor(" + kappa + ")";
    }
    if (const auto* e = std::get_if<MonotoneFn::ExpBase>(&d.g.kind())) {
        return "logfloor(" + std::to_string(e->base) + ", " + kappa + ")";
    }
    return "invfloor(" + format_fn(d.g) + ", " + kappa + ")";
}

} // namespace gross
