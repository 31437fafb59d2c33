#include "gross/geometry.hpp"

#include "gross/error.hpp"

namespace gross {

namespace {

bool less(const GrossNumber& a, const GrossNumber& b) { return cmp(a, b) == Sign::Negative; }

std::string times(Glyph glyph) { return glyph == Glyph::Unicode ? "\xC3\x97" : " x "; }

std::string format_real(const RealInterval& i, Glyph glyph)
{
    return "[" + format_numeral(i.lo, glyph) + ", " + format_numeral(i.hi, glyph) + "]";
}

} // namespace

RealInterval make_real_interval(GrossNumber lo, GrossNumber hi)
{
    if (less(hi, lo)) {
        throw Error(Errc::InvalidArgument, "[" + format_numeral(lo) + ", " + format_numeral(hi) + "] is reversed");
    }
    return {std::move(lo), std::move(hi)};
}

Strip reflect_strip(const Strip& s, const GrossNumber& axis)
{
    const GrossNumber twice = axis * 2;
    return {{twice - s.x.hi, twice - s.x.lo}, s.y};
}

bool strip_subset(const Strip& inner, const Strip& outer)
{
    auto nests = [](const RealInterval& in, const RealInterval& out) {
        return !less(in.lo, out.lo) && !less(out.hi, in.hi);
    };
    return nests(inner.x, outer.x) && nests(inner.y, outer.y);
}

Uncovered uncovered_extent(const Strip& inner, const Strip& outer)
{
    Uncovered u;
    if (less(inner.x.lo, outer.x.lo)) {
        const GrossNumber& stop = less(inner.x.hi, outer.x.lo) ? inner.x.hi : outer.x.lo;
        u.left = stop - inner.x.lo;
    }
    if (less(outer.x.hi, inner.x.hi)) {
        const GrossNumber& start = less(outer.x.hi, inner.x.lo) ? inner.x.lo : outer.x.hi;
        u.right = inner.x.hi - start;
    }
    return u;
}

std::string format_strip(const Strip& s, Glyph glyph)
{
    return format_real(s.x, glyph) + times(glyph) + format_real(s.y, glyph);
}

namespace classical {

namespace {

Bound to_bound(const GrossNumber& v)
{
    if (is_infinite(v)) {
        return {v.sign() == Sign::Positive ? Bound::Kind::PosInfinity : Bound::Kind::NegInfinity, 0};
    }
    return {Bound::Kind::Finite, v.coefficient(0)};
}

// -∞ < finite < +∞; equal infinities compare equal.
int compare(const Bound& a, const Bound& b)
{
    auto rank = [](const Bound& x) {
        return x.kind == Bound::Kind::NegInfinity ? 0 : (x.kind == Bound::Kind::Finite ? 1 : 2);
    };
    if (rank(a) != rank(b)) {
        return rank(a) < rank(b) ? -1 : 1;
    }
    if (a.kind != Bound::Kind::Finite) {
        return 0;
    }
    return a.value < b.value ? -1 : (b.value < a.value ? 1 : 0);
}

Bound reflect_bound(const Bound& b, const Rational& axis)
{
    switch (b.kind) {
    case Bound::Kind::NegInfinity: return {Bound::Kind::PosInfinity, 0};
    case Bound::Kind::PosInfinity: return {Bound::Kind::NegInfinity, 0};
    case Bound::Kind::Finite: break;
    }
    return {Bound::Kind::Finite, 2 * axis - b.value};
}

std::string format_bound(const Bound& b)
{
    switch (b.kind) {
    case Bound::Kind::NegInfinity: return "-inf";
    case Bound::Kind::PosInfinity: return "+inf";
    case Bound::Kind::Finite: break;
    }
    return format_rational(b.value);
}

std::string format_interval(const Interval& i)
{
    const bool open_lo = i.lo.kind != Bound::Kind::Finite;
    const bool open_hi = i.hi.kind != Bound::Kind::Finite;
    return std::string(open_lo ? "]" : "[") + format_bound(i.lo) + ", " + format_bound(i.hi) + (open_hi ? "[" : "]");
}

} // namespace

Strip from_gross(const gross::Strip& s)
{
    return {{to_bound(s.x.lo), to_bound(s.x.hi)}, {to_bound(s.y.lo), to_bound(s.y.hi)}};
}

Strip reflect(const Strip& s, const Rational& axis)
{
    return {{reflect_bound(s.x.hi, axis), reflect_bound(s.x.lo, axis)}, s.y};
}

bool subset(const Strip& inner, const Strip& outer)
{
    auto nests = [](const Interval& in, const Interval& out) {
        return compare(out.lo, in.lo) <= 0 && compare(in.hi, out.hi) <= 0;
    };
    return nests(inner.x, outer.x) && nests(inner.y, outer.y);
}

std::string format(const Strip& s, Glyph glyph)
{
    return format_interval(s.x) + times(glyph) + format_interval(s.y);
}

} // namespace classical

HalfPlaneDemo run_halfplane_demo(const Rational& a, const Rational& d, const GrossNumber& b, const GrossNumber& c)
{
    if (b.sign() != Sign::Positive || c.sign() != Sign::Positive) {
        throw Error(Errc::InvalidArgument, "b and c must be positive");
    }
    const Strip a_strip{make_real_interval(-b, GrossNumber(a)), make_real_interval(-c, c)};
    const Strip c_strip = reflect_strip(a_strip, a);
    const Strip b_strip = reflect_strip(c_strip, d);

    HalfPlaneDemo demo{a_strip,
                       c_strip,
                       b_strip,
                       strip_subset(b_strip, a_strip),
                       uncovered_extent(b_strip, a_strip),
                       classical::from_gross(a_strip),
                       {},
                       {},
                       false};
    demo.classical_c = classical::reflect(demo.classical_a, a);
    demo.classical_b = classical::reflect(demo.classical_c, d);
    demo.classical_b_within_a = classical::subset(demo.classical_b, demo.classical_a);
    return demo;
}

} // namespace gross
