#include "gross/sets.hpp"

#include <algorithm>

#include "gross/error.hpp"

namespace gross {

namespace {

bool less_equal(const GrossNumber& a, const GrossNumber& b) { return cmp(a, b) != Sign::Positive; }
bool less(const GrossNumber& a, const GrossNumber& b) { return cmp(a, b) == Sign::Negative; }

const GrossNumber& min_of(const GrossNumber& a, const GrossNumber& b) { return less(b, a) ? b : a; }
const GrossNumber& max_of(const GrossNumber& a, const GrossNumber& b) { return less(a, b) ? b : a; }

void require_positive_integer(const GrossNumber& kappa)
{
    if (!is_integer(kappa) || kappa.sign() != Sign::Positive) {
        throw Error(Errc::InvalidArgument, "kappa must be a positive integer, got " + format_numeral(kappa));
    }
}

} // namespace

GrossInterval make_interval(GrossNumber lo, GrossNumber hi)
{
    if (!is_integer(lo)) {
        throw Error(Errc::NonIntegerEndpoint, format_numeral(lo));
    }
    if (!is_integer(hi)) {
        throw Error(Errc::NonIntegerEndpoint, format_numeral(hi));
    }
    if (less(hi, lo)) {
        throw Error(Errc::EmptyIntervalRejected, "[" + format_numeral(lo) + ".." + format_numeral(hi) + "]");
    }
    return {std::move(lo), std::move(hi)};
}

IntervalSet::IntervalSet(const GrossInterval& interval) : parts_{interval} {}

IntervalSet IntervalSet::normalized(std::vector<GrossInterval> parts)
{
    std::sort(parts.begin(), parts.end(),
              [](const GrossInterval& a, const GrossInterval& b) { return less(a.lo, b.lo); });
    IntervalSet out;
    for (auto& part : parts) {
        if (!out.parts_.empty() && less_equal(part.lo, out.parts_.back().hi + 1)) {
            auto& last = out.parts_.back();
            if (less(last.hi, part.hi)) {
                last.hi = std::move(part.hi);
            }
        } else {
            out.parts_.push_back(std::move(part));
        }
    }
    return out;
}

bool IntervalSet::contains(const GrossNumber& x) const
{
    // First part whose hi ≥ x.
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [&](const GrossInterval& p) { return less(p.hi, x); });
    return it != parts_.end() && less_equal(it->lo, x);
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const
{
    return set_difference(*this, other).empty();
}

bool IntervalSet::is_finite() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const GrossInterval& p) {
        return gross::is_finite(p.lo) && gross::is_finite(p.hi);
    });
}

IntervalSet make_set(const std::vector<GrossInterval>& intervals)
{
    std::vector<GrossInterval> checked;
    checked.reserve(intervals.size());
    for (const auto& i : intervals) {
        checked.push_back(make_interval(i.lo, i.hi));
    }
    return IntervalSet::normalized(std::move(checked));
}

IntervalSet range(const GrossNumber& lo, const GrossNumber& hi)
{
    return IntervalSet(make_interval(lo, hi));
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b)
{
    std::vector<GrossInterval> all(a.parts().begin(), a.parts().end());
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    return IntervalSet::normalized(std::move(all));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b)
{
    std::vector<GrossInterval> out;
    const auto pa = a.parts();
    const auto pb = b.parts();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < pa.size() && j < pb.size()) {
        const GrossNumber& lo = max_of(pa[i].lo, pb[j].lo);
        const GrossNumber& hi = min_of(pa[i].hi, pb[j].hi);
        if (less_equal(lo, hi)) {
            out.push_back({lo, hi});
        }
        if (less(pa[i].hi, pb[j].hi)) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet::normalized(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b)
{
    std::vector<GrossInterval> out;
    const auto pb = b.parts();
    std::size_t j = 0;
    for (const auto& part : a.parts()) {
        GrossNumber lo = part.lo;
        bool alive = true;
        while (j < pb.size() && less(pb[j].hi, lo)) {
            ++j;
        }
        for (std::size_t k = j; k < pb.size() && less_equal(pb[k].lo, part.hi); ++k) {
            if (less(lo, pb[k].lo)) {
                out.push_back({lo, pb[k].lo - 1});
            }
            if (less(pb[k].hi, part.hi)) {
                lo = pb[k].hi + 1;
            } else {
                alive = false;
                break;
            }
        }
        if (alive) {
            out.push_back({lo, part.hi});
        }
    }
    return IntervalSet::normalized(std::move(out));
}

GrossNumber cardinality(const IntervalSet& s)
{
    GrossNumber total;
    for (const auto& part : s.parts()) {
        total += part.size();
    }
    return total;
}

Extrema extrema(const IntervalSet& s)
{
    if (s.empty()) {
        throw Error(Errc::EmptySet);
    }
    return {s.parts().front().lo, s.parts().back().hi};
}

std::optional<GrossNumber> is_initial_segment(const IntervalSet& s, const GrossNumber& kappa)
{
    require_positive_integer(kappa);
    if (!s.is_subset_of(range(1, kappa))) {
        throw Error(Errc::NotSubsetOfRange, format_set(s) + " within [1.." + format_numeral(kappa) + "]");
    }
    if (s.parts().size() == 1 && s.parts().front().lo == GrossNumber(1)) {
        return s.parts().front().hi;
    }
    return std::nullopt;
}

std::optional<GrossNumber> is_final_segment(const IntervalSet& s, const GrossNumber& kappa)
{
    require_positive_integer(kappa);
    if (!s.is_subset_of(range(1, kappa))) {
        throw Error(Errc::NotSubsetOfRange, format_set(s) + " within [1.." + format_numeral(kappa) + "]");
    }
    auto sigma = is_initial_segment(iota(s, kappa), kappa);
    if (!sigma) {
        return std::nullopt;
    }
    return kappa + 1 - *sigma;
}

GrossInterval convex_hull(const IntervalSet& s)
{
    auto [lo, hi] = extrema(s);
    return {std::move(lo), std::move(hi)};
}

IntervalSet map_affine(const IntervalSet& s, Orientation orientation, const GrossNumber& offset)
{
    if (!is_integer(offset)) {
        throw Error(Errc::NonIntegerOffset, format_numeral(offset));
    }
    std::vector<GrossInterval> image;
    image.reserve(s.parts().size());
    for (const auto& part : s.parts()) {
        if (orientation == Orientation::Preserving) {
            image.push_back({part.lo + offset, part.hi + offset});
        } else {
            image.push_back({offset - part.hi, offset - part.lo});
        }
    }
    return IntervalSet::normalized(std::move(image));
}

IntervalSet iota(const IntervalSet& s, const GrossNumber& kappa)
{
    return map_affine(s, Orientation::Reversing, kappa + 1);
}

IntervalSet union_initial_segments(const GrossNumber& kappa)
{
    require_positive_integer(kappa);
    if (kappa == GrossNumber(1)) {
        return {};
    }
    return range(1, kappa - 1);
}

std::string format_interval(const GrossInterval& i, Glyph glyph)
{
    return "[" + format_numeral(i.lo, glyph) + ".." + format_numeral(i.hi, glyph) + "]";
}

std::string format_set(const IntervalSet& s, Glyph glyph)
{
    if (s.empty()) {
        return "{}";
    }
    std::string out;
    for (const auto& part : s.parts()) {
        if (!out.empty()) {
            out += " | ";
        }
        out += format_interval(part, glyph);
    }
    return out;
}

} // namespace gross
