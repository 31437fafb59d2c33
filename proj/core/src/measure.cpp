#include "gross/measure.hpp"

#include <algorithm>

#include "gross/error.hpp"

namespace gross {

namespace {

bool less(const GrossNumber& a, const GrossNumber& b) { return cmp(a, b) == Sign::Negative; }

[[noreturn]] void not_a_bijection(const std::string& why)
{
    throw Error(Errc::NotABijection, why);
}

void check_piece(const AffinePiece& p)
{
    if (!is_integer(p.domain.lo) || !is_integer(p.domain.hi) || less(p.domain.hi, p.domain.lo)) {
        not_a_bijection("bad piece domain " + format_interval(p.domain));
    }
    if (!is_integer(p.offset)) {
        not_a_bijection("non-integer offset " + format_numeral(p.offset));
    }
}

// Disjoint intervals ⇔ the union is as large as the sum of the parts.
bool pairwise_disjoint(const std::vector<GrossInterval>& intervals, const IntervalSet& joined)
{
    GrossNumber sum;
    for (const auto& i : intervals) {
        sum += i.size();
    }
    return sum == cardinality(joined);
}

std::optional<GrossInterval> overlap(const GrossInterval& a, const GrossInterval& b)
{
    const GrossNumber& lo = less(a.lo, b.lo) ? b.lo : a.lo;
    const GrossNumber& hi = less(a.hi, b.hi) ? a.hi : b.hi;
    if (less(hi, lo)) {
        return std::nullopt;
    }
    return GrossInterval{lo, hi};
}

} // namespace

Measurement Measurement::make(GrossNumber mu, std::vector<AffinePiece> pieces, IntervalSet target)
{
    if (!is_integer(mu) || mu.sign() != Sign::Positive) {
        not_a_bijection("mu must be a positive integer, got " + format_numeral(mu));
    }
    if (pieces.empty()) {
        not_a_bijection("no pieces");
    }
    for (const auto& p : pieces) {
        check_piece(p);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& a, const AffinePiece& b) { return less(a.domain.lo, b.domain.lo); });

    Measurement m;
    m.mu_ = std::move(mu);
    GrossNumber expected = 1;
    for (auto& p : pieces) {
        if (p.domain.lo != expected) {
            not_a_bijection("domains do not partition [1.." + format_numeral(m.mu_) + "] at " +
                            format_numeral(expected));
        }
        expected = p.domain.hi + 1;
        if (!m.pieces_.empty() && m.pieces_.back().offset == p.offset) {
            m.pieces_.back().domain.hi = std::move(p.domain.hi);
        } else {
            m.pieces_.push_back(std::move(p));
        }
    }
    if (expected != m.mu_ + 1) {
        not_a_bijection("domains end at " + format_numeral(expected - 1) + ", not at mu");
    }

    std::vector<GrossInterval> images;
    images.reserve(m.pieces_.size());
    for (const auto& p : m.pieces_) {
        images.push_back(p.image());
    }
    IntervalSet covered = IntervalSet::normalized(images);
    if (!pairwise_disjoint(images, covered)) {
        not_a_bijection("piece images overlap");
    }
    if (covered != target) {
        not_a_bijection("images cover " + format_set(covered) + ", target is " + format_set(target));
    }
    m.target_ = std::move(target);
    return m;
}

GrossNumber Measurement::apply(const GrossNumber& k) const
{
    auto it = std::partition_point(pieces_.begin(), pieces_.end(),
                                   [&](const AffinePiece& p) { return less(p.domain.hi, k); });
    if (it == pieces_.end() || !it->domain.contains(k)) {
        throw Error(Errc::InvalidArgument, format_numeral(k) + " is not in [1.." + format_numeral(mu_) + "]");
    }
    return k + it->offset;
}

GrossNumber Measurement::inverse(const GrossNumber& y) const
{
    for (const auto& p : pieces_) {
        if (p.image().contains(y)) {
            return y - p.offset;
        }
    }
    throw Error(Errc::InvalidArgument, format_numeral(y) + " is not in the target");
}

Measurement canonical_measurement(const IntervalSet& s)
{
    if (s.empty()) {
        throw Error(Errc::EmptySet);
    }
    std::vector<AffinePiece> pieces;
    pieces.reserve(s.parts().size());
    GrossNumber used;
    for (const auto& part : s.parts()) {
        GrossNumber next = used + part.size();
        pieces.push_back({{used + 1, next}, part.lo - used - 1});
        used = std::move(next);
    }
    return Measurement::make(std::move(used), std::move(pieces), s);
}

Measurement min_extraction_measurement(const IntervalSet& s, ExtractionOptions options)
{
    if (s.empty()) {
        throw Error(Errc::EmptySet);
    }
    if (!s.is_finite()) {
        return canonical_measurement(s);
    }
    const Rational count = cardinality(s).to_rational();
    if (count > options.bound) {
        throw Error(Errc::BoundExceeded,
                    format_rational(count) + " extractions > bound " + std::to_string(options.bound));
    }

    // A_n as a queue of finite intervals; its minimum is the front's lower end.
    struct Block {
        Integer lo;
        Integer hi;
    };
    std::vector<Block> rest;
    for (const auto& part : s.parts()) {
        rest.push_back({boost::multiprecision::numerator(part.lo.to_rational()),
                        boost::multiprecision::numerator(part.hi.to_rational())});
    }

    struct Run {
        Integer first_index;
        Integer last_index;
        Integer offset;
    };
    std::vector<Run> runs;
    std::size_t front = 0;
    Integer n = 0;
    while (front < rest.size()) {
        const Integer value = rest[front].lo; // min A_n
        ++n;
        if (!runs.empty() && value - n == runs.back().offset) {
            runs.back().last_index = n;
        } else {
            runs.push_back({n, n, value - n});
        }
        if (rest[front].lo == rest[front].hi) {
            ++front;
        } else {
            ++rest[front].lo;
        }
    }

    std::vector<AffinePiece> pieces;
    pieces.reserve(runs.size());
    for (const auto& r : runs) {
        pieces.push_back({{GrossNumber(r.first_index), GrossNumber(r.last_index)}, GrossNumber(r.offset)});
    }
    return Measurement::make(GrossNumber(n), std::move(pieces), s);
}

Measurement concat(const Measurement& first, const Measurement& rest)
{
    if (!set_intersection(first.target(), rest.target()).empty()) {
        throw Error(Errc::OverlappingTargets,
                    format_set(first.target()) + " and " + format_set(rest.target()));
    }
    std::vector<AffinePiece> pieces(first.pieces().begin(), first.pieces().end());
    for (const auto& p : rest.pieces()) {
        pieces.push_back({{p.domain.lo + first.mu(), p.domain.hi + first.mu()}, p.offset - first.mu()});
    }
    return Measurement::make(first.mu() + rest.mu(), std::move(pieces),
                             set_union(first.target(), rest.target()));
}

Measurement transport(const Measurement& m, const std::vector<AffinePiece>& bijection)
{
    if (bijection.empty()) {
        not_a_bijection("no pieces");
    }
    std::vector<GrossInterval> domains;
    std::vector<GrossInterval> images;
    for (const auto& q : bijection) {
        check_piece(q);
        domains.push_back(q.domain);
        images.push_back(q.image());
    }
    const IntervalSet domain_set = IntervalSet::normalized(domains);
    if (!pairwise_disjoint(domains, domain_set)) {
        not_a_bijection("piece domains overlap");
    }
    if (domain_set != m.target()) {
        not_a_bijection("domains cover " + format_set(domain_set) + ", expected " + format_set(m.target()));
    }
    const IntervalSet image_set = IntervalSet::normalized(images);
    if (!pairwise_disjoint(images, image_set)) {
        not_a_bijection("piece images overlap");
    }

    std::vector<AffinePiece> composed;
    for (const auto& p : m.pieces()) {
        const GrossInterval reached = p.image();
        for (const auto& q : bijection) {
            if (auto common = overlap(reached, q.domain)) {
                composed.push_back({{common->lo - p.offset, common->hi - p.offset}, p.offset + q.offset});
            }
        }
    }
    return Measurement::make(m.mu(), std::move(composed), image_set);
}

Sign compare_measured(const Measurement& a, const Measurement& b)
{
    return cmp(a.mu(), b.mu());
}

std::optional<std::vector<AffinePiece>> explicit_injection(const Measurement& a, const Measurement& b)
{
    if (compare_measured(a, b) == Sign::Positive) {
        return std::nullopt;
    }
    // a-index k lands on b.apply(k); both measurements are shifts on blocks.
    std::vector<AffinePiece> pieces;
    for (const auto& p : a.pieces()) {
        for (const auto& q : b.pieces()) {
            if (auto common = overlap(p.domain, q.domain)) {
                pieces.push_back({{common->lo + p.offset, common->hi + p.offset}, q.offset - p.offset});
            }
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& x, const AffinePiece& y) { return less(x.domain.lo, y.domain.lo); });
    return pieces;
}

Measurement complement_measurement(const Measurement& whole, const Measurement& part)
{
    if (!part.target().is_subset_of(whole.target())) {
        throw Error(Errc::NotASubset, format_set(part.target()) + " in " + format_set(whole.target()));
    }
    IntervalSet rest = set_difference(whole.target(), part.target());
    if (rest.empty()) {
        throw Error(Errc::EmptySet, "complement of the whole set");
    }
    return canonical_measurement(rest);
}

SplitMeasurements intersection_split(const Measurement& a, const Measurement& b)
{
    if (a.mu() != b.mu()) {
        throw Error(Errc::PreconditionViolated, "#A=#B");
    }
    if (set_intersection(a.target(), b.target()).empty()) {
        throw Error(Errc::PreconditionViolated, "A∩B≠∅");
    }
    if (a.target() == b.target()) {
        throw Error(Errc::PreconditionViolated, "A≠B");
    }
    return {canonical_measurement(set_difference(a.target(), b.target())),
            canonical_measurement(set_difference(b.target(), a.target()))};
}

} // namespace gross
