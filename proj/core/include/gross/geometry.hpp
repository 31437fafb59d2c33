#pragma once

#include <string>

#include "gross/gnum.hpp"

namespace gross {

/// Closed real interval [lo, hi] with gross-number bounds.
struct RealInterval {
    GrossNumber lo;
    GrossNumber hi;

    GrossNumber length() const { return hi - lo; }

    friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// Throws InvalidArgument when lo > hi.
RealInterval make_real_interval(GrossNumber lo, GrossNumber hi);

/// Axis-parallel strip x-range × y-range. Only abscissas are ever
/// transformed.
struct Strip {
    RealInterval x;
    RealInterval y;

    friend bool operator==(const Strip&, const Strip&) = default;
};

/// Reflection in the vertical line x = axis: x ↦ −x + 2·axis.
Strip reflect_strip(const Strip& s, const GrossNumber& axis);

bool strip_subset(const Strip& inner, const Strip& outer);

/// Length of inner's x-range lying left of and right of outer's x-range.
struct Uncovered {
    GrossNumber left;
    GrossNumber right;

    GrossNumber total() const { return left + right; }
};

Uncovered uncovered_extent(const Strip& inner, const Strip& outer);

std::string format_strip(const Strip& s, Glyph glyph = Glyph::Unicode);

/// The contrast model: bounds are rationals or the absorbing tokens ±∞, and
/// two infinite bounds of the same sign cannot be told apart.
namespace classical {

struct Bound {
    enum class Kind { NegInfinity, Finite, PosInfinity };
    Kind kind = Kind::Finite;
    Rational value;

    friend bool operator==(const Bound&, const Bound&) = default;
};

struct Interval {
    Bound lo;
    Bound hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Strip {
    Interval x;
    Interval y;
    friend bool operator==(const Strip&, const Strip&) = default;
};

/// Infinite endpoints collapse to ±∞; finite ones keep their rational part.
Strip from_gross(const gross::Strip& s);
Strip reflect(const Strip& s, const Rational& axis);
bool subset(const Strip& inner, const Strip& outer);
std::string format(const Strip& s, Glyph glyph = Glyph::Unicode);

} // namespace classical

/// A = [−b, a]×I with I = [−c, c]; C is A reflected in x = a, B is C
/// reflected in x = d.
struct HalfPlaneDemo {
    Strip a_strip;
    Strip c_strip;
    Strip b_strip;
    bool b_within_a;
    Uncovered uncovered;
    classical::Strip classical_a;
    classical::Strip classical_c;
    classical::Strip classical_b;
    bool classical_b_within_a;
};

/// Requires a, d finite rationals and b, c positive.
HalfPlaneDemo run_halfplane_demo(const Rational& a, const Rational& d, const GrossNumber& b, const GrossNumber& c);

} // namespace gross
