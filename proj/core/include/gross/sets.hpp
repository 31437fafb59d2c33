#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gross/gnum.hpp"

namespace gross {

/// The integers k with lo ≤ k ≤ hi. Endpoints are gross-integers.
struct GrossInterval {
    GrossNumber lo;
    GrossNumber hi;

    bool contains(const GrossNumber& x) const { return cmp(lo, x) != Sign::Positive && cmp(x, hi) != Sign::Positive; }
    /// hi − lo + 1
    GrossNumber size() const { return hi - lo + 1; }

    friend bool operator==(const GrossInterval&, const GrossInterval&) = default;
};

/// Validates endpoints. Throws NonIntegerEndpoint or EmptyIntervalRejected.
GrossInterval make_interval(GrossNumber lo, GrossNumber hi);

/// A finite union of gross-integer intervals kept sorted, disjoint and
/// non-adjacent, so equal sets have equal representations.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(const GrossInterval& interval);

    /// Sorts and merges already-validated intervals.
    static IntervalSet normalized(std::vector<GrossInterval> parts);

    std::span<const GrossInterval> parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    bool contains(const GrossNumber& x) const;
    bool is_subset_of(const IntervalSet& other) const;
    /// True when every endpoint is finite.
    bool is_finite() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<GrossInterval> parts_;
};

/// Validating constructor over arbitrary intervals (any order, overlapping or
/// adjacent). Throws NonIntegerEndpoint, EmptyIntervalRejected.
IntervalSet make_set(const std::vector<GrossInterval>& intervals);
/// [lo..hi] as a set; validates like make_interval.
IntervalSet range(const GrossNumber& lo, const GrossNumber& hi);

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

inline IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return set_union(a, b); }
inline IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return set_intersection(a, b); }
inline IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return set_difference(a, b); }

GrossNumber cardinality(const IntervalSet& s);

struct Extrema {
    GrossNumber min;
    GrossNumber max;
};

/// Throws EmptySet.
Extrema extrema(const IntervalSet& s);

/// σ such that s = [1..σ], if any. Requires κ a positive integer and
/// s ⊆ [1..κ] (NotSubsetOfRange otherwise).
std::optional<GrossNumber> is_initial_segment(const IntervalSet& s, const GrossNumber& kappa);
/// ν such that s = [ν..κ], if any; decided through the reversal x ↦ κ+1−x.
std::optional<GrossNumber> is_final_segment(const IntervalSet& s, const GrossNumber& kappa);

/// [min s .. max s]. Throws EmptySet.
GrossInterval convex_hull(const IntervalSet& s);

enum class Orientation { Preserving, Reversing };

/// Image of s under x ↦ x + offset (Preserving) or x ↦ offset − x
/// (Reversing). Throws NonIntegerOffset.
IntervalSet map_affine(const IntervalSet& s, Orientation orientation, const GrossNumber& offset);

/// x ↦ κ+1−x, the order-reversing involution of [1..κ].
IntervalSet iota(const IntervalSet& s, const GrossNumber& kappa);

/// Closed form of the union of S_n = [1..n−1] over all n ≤ κ, i.e. [1..κ−1].
IntervalSet union_initial_segments(const GrossNumber& kappa);

/// "[1..3] | [5..①]"; the empty set prints as "{}".
std::string format_set(const IntervalSet& s, Glyph glyph = Glyph::Unicode);
std::string format_interval(const GrossInterval& i, Glyph glyph = Glyph::Unicode);

} // namespace gross
