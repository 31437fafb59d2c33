#include <gtest/gtest.h>

#include "gross/error.hpp"
#include "gross/measure.hpp"
#include "gross/serialize.hpp"
#include "support/generators.hpp"

namespace gross {
namespace {

const GrossNumber G1 = GrossNumber::grossone();

Errc error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::InvalidArgument;
}

// Ascending list of the members of a finite set, by enumeration.
std::vector<long long> members(const IntervalSet& s)
{
    std::vector<long long> out;
    for (const auto& part : s.parts()) {
        for (long long k = testing::to_ll(part.lo); k <= testing::to_ll(part.hi); ++k) {
            out.push_back(k);
        }
    }
    return out;
}

// Invariants every measurement must satisfy, checked at all piece endpoints.
void expect_well_formed(const Measurement& m)
{
    const auto pieces = m.pieces();
    ASSERT_FALSE(pieces.empty());
    EXPECT_EQ(pieces.front().domain.lo, GrossNumber(1));
    EXPECT_EQ(pieces.back().domain.hi, m.mu());
    GrossNumber images;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0) {
            EXPECT_EQ(pieces[i].domain.lo, pieces[i - 1].domain.hi + 1);
        }
        images += pieces[i].domain.size();
        for (const GrossNumber& k : {pieces[i].domain.lo, pieces[i].domain.hi}) {
            const GrossNumber y = m.apply(k);
            EXPECT_TRUE(m.target().contains(y));
            EXPECT_EQ(m.inverse(y), k);
        }
    }
    EXPECT_EQ(images, m.mu());
    EXPECT_EQ(cardinality(m.target()), m.mu());
}

TEST(CanonicalMeasurement, Examples)
{
    const Measurement m = canonical_measurement(range(4, G1));
    EXPECT_EQ(m.mu(), G1 - 3);
    ASSERT_EQ(m.pieces().size(), 1u);
    EXPECT_EQ(m.pieces()[0].offset, GrossNumber(3));
    EXPECT_EQ(m.apply(1), GrossNumber(4));
    EXPECT_EQ(m.apply(G1 - 3), G1);
    const GrossNumber half = GrossNumber::monomial(1, Rational(1, 2));
    EXPECT_EQ(m.apply(half), half + 3);
    EXPECT_EQ(m.inverse(G1 - 10), G1 - 13);
    expect_well_formed(m);

    const Measurement id = canonical_measurement(range(1, G1));
    EXPECT_EQ(id.mu(), G1);
    ASSERT_EQ(id.pieces().size(), 1u);
    EXPECT_EQ(id.pieces()[0].offset, GrossNumber(0));

    const Measurement two = canonical_measurement(make_set({{1, 2}, {5, 6}}));
    EXPECT_EQ(two.mu(), GrossNumber(4));
    ASSERT_EQ(two.pieces().size(), 2u);
    EXPECT_EQ(two.pieces()[0], (AffinePiece{{1, 2}, 0}));
    EXPECT_EQ(two.pieces()[1], (AffinePiece{{3, 4}, 2}));
    EXPECT_EQ(error_of([] { canonical_measurement(IntervalSet{}); }), Errc::EmptySet);
}

TEST(MinExtraction, Examples)
{
    const Measurement m = min_extraction_measurement(make_set({{3, 3}, {1, 1}}));
    EXPECT_EQ(m.apply(1), GrossNumber(1));
    EXPECT_EQ(m.apply(2), GrossNumber(3));
    EXPECT_EQ(min_extraction_measurement(range(1, 5)), canonical_measurement(range(1, 5)));
    const IntervalSet s = make_set({{2, 4}, {8, 9}});
    EXPECT_EQ(min_extraction_measurement(s).mu(), GrossNumber(5));
    EXPECT_EQ(min_extraction_measurement(s), canonical_measurement(s));
    EXPECT_EQ(min_extraction_measurement(range(4, G1)), canonical_measurement(range(4, G1)));
}

TEST(MinExtraction, Errors)
{
    EXPECT_EQ(error_of([] { min_extraction_measurement(IntervalSet{}); }), Errc::EmptySet);
    EXPECT_EQ(error_of([] { min_extraction_measurement(range(1, 11), {10}); }), Errc::BoundExceeded);
    EXPECT_NO_THROW(min_extraction_measurement(range(1, 10), {10}));
}

TEST(MinExtraction, AgreesWithEnumeration)
{
    testing::Rng rng(31);
    for (int round = 0; round < 200; ++round) {
        const IntervalSet s = testing::random_finite_set(rng, 400, 8);
        const Measurement m = min_extraction_measurement(s);
        const auto elems = members(s);
        ASSERT_EQ(m.mu(), GrossNumber(static_cast<long long>(elems.size())));
        for (std::size_t k = 0; k < elems.size(); ++k) {
            ASSERT_EQ(m.apply(static_cast<long long>(k + 1)), GrossNumber(elems[k]));
        }
        EXPECT_EQ(m, canonical_measurement(s));
        expect_well_formed(m);
    }
}

TEST(Measurement, MakeRejectsNonBijections)
{
    EXPECT_EQ(error_of([] { Measurement::make(3, {{{1, 2}, 0}}, range(1, 2)); }), Errc::NotABijection);
    EXPECT_EQ(error_of([] { Measurement::make(2, {{{1, 1}, 0}, {{2, 2}, -1}}, range(1, 1)); }),
              Errc::NotABijection);
    EXPECT_EQ(error_of([] { Measurement::make(2, {{{1, 2}, 0}}, range(1, 3)); }), Errc::NotABijection);
    // Merging neighbouring pieces with equal offsets.
    const Measurement m = Measurement::make(4, {{{1, 2}, 5}, {{3, 4}, 5}}, range(6, 9));
    EXPECT_EQ(m.pieces().size(), 1u);
    EXPECT_EQ(error_of([&] { m.apply(5); }), Errc::InvalidArgument);
    EXPECT_EQ(error_of([&] { m.inverse(1); }), Errc::InvalidArgument);
}

TEST(Concat, Examples)
{
    EXPECT_EQ(concat(canonical_measurement(range(1, 3)), canonical_measurement(range(7, 8))).mu(), GrossNumber(5));
    const Measurement h = concat(canonical_measurement(range(1, G1)), canonical_measurement(range(G1 + 1, G1 + 2)));
    EXPECT_EQ(h.mu(), G1 + 2);
    EXPECT_EQ(h.target(), range(1, G1 + 2));
    expect_well_formed(h);
    EXPECT_EQ(error_of([] { concat(canonical_measurement(range(1, 3)), canonical_measurement(range(3, 4))); }),
              Errc::OverlappingTargets);
}

TEST(Concat, MuIsAdditive)
{
    testing::Rng rng(32);
    for (int round = 0; round < 200; ++round) {
        const IntervalSet a = testing::random_symbolic_set(rng);
        const IntervalSet rest = testing::random_symbolic_set(rng) - a;
        if (rest.empty()) {
            continue;
        }
        const Measurement ma = canonical_measurement(a);
        const Measurement mr = canonical_measurement(rest);
        const Measurement h = concat(ma, mr);
        EXPECT_EQ(h.mu(), ma.mu() + mr.mu());
        EXPECT_EQ(h.target(), a | rest);
        EXPECT_EQ(h.apply(ma.mu() + 1), mr.apply(1));
        expect_well_formed(h);
    }
}

TEST(Transport, Examples)
{
    const Measurement m = canonical_measurement(range(1, G1));
    EXPECT_EQ(transport(m, {{{1, G1}, 0}}), m);
    const Measurement shifted = transport(m, {{{1, G1}, 1}});
    EXPECT_EQ(shifted.mu(), G1);
    EXPECT_EQ(shifted.target(), range(2, G1 + 1));
    EXPECT_EQ(shifted.apply(G1), G1 + 1);
    EXPECT_EQ(error_of([&] { transport(m, {{{1, 5}, 0}, {{6, G1}, -1}}); }), Errc::NotABijection);
    EXPECT_EQ(error_of([&] { transport(m, {{{1, 5}, 0}}); }), Errc::NotABijection);
}

TEST(Transport, SwapOfBlocks)
{
    // Swap [1..3] and [4..①] of [1..①]: the result measures the same set.
    const Measurement m = canonical_measurement(range(1, G1));
    const Measurement t = transport(m, {{{1, 3}, G1 - 3}, {{4, G1}, -3}});
    EXPECT_EQ(t.mu(), G1);
    EXPECT_EQ(t.target(), range(1, G1));
    EXPECT_EQ(t.apply(1), G1 - 2);
    EXPECT_EQ(t.apply(G1 - 3), G1 - 6);
    EXPECT_EQ(t.apply(G1), G1 - 3);
    expect_well_formed(t);
}

TEST(CompareMeasured, Examples)
{
    const Measurement inner = canonical_measurement(range(2, G1 - 1));
    const Measurement whole = canonical_measurement(range(1, G1));
    EXPECT_EQ(compare_measured(inner, whole), Sign::Negative);
    EXPECT_EQ(compare_measured(whole, whole), Sign::Zero);
    EXPECT_EQ(compare_measured(canonical_measurement(range(1, GrossNumber::monomial(2))), whole), Sign::Positive);
}

TEST(ExplicitInjection, IsInjectiveIntoTarget)
{
    testing::Rng rng(33);
    for (int round = 0; round < 200; ++round) {
        const Measurement a = canonical_measurement(testing::random_symbolic_set(rng));
        const Measurement b = canonical_measurement(testing::random_symbolic_set(rng));
        const auto inj = explicit_injection(a, b);
        EXPECT_EQ(inj.has_value(), compare_measured(a, b) != Sign::Positive);
        if (!inj) {
            continue;
        }
        std::vector<GrossInterval> domains;
        std::vector<GrossInterval> images;
        for (const auto& p : *inj) {
            domains.push_back(p.domain);
            images.push_back(p.image());
            // g(f^-1(x)) at both ends of each piece.
            for (const GrossNumber& x : {p.domain.lo, p.domain.hi}) {
                EXPECT_EQ(x + p.offset, b.apply(a.inverse(x)));
            }
        }
        EXPECT_EQ(make_set(domains), a.target());
        const IntervalSet image_set = make_set(images);
        EXPECT_TRUE(image_set.is_subset_of(b.target()));
        EXPECT_EQ(cardinality(image_set), a.mu());
    }
}

TEST(Bernstein, InjectionsBothWaysForceEquality)
{
    testing::Rng rng(34);
    int both = 0;
    for (int round = 0; round < 400; ++round) {
        const IntervalSet sa = testing::random_symbolic_set(rng, 2);
        const IntervalSet sb = round % 3 == 0 ? map_affine(sa, Orientation::Preserving, testing::uniform(rng, -5, 5))
                                              : testing::random_symbolic_set(rng, 2);
        const Measurement a = canonical_measurement(sa);
        const Measurement b = canonical_measurement(sb);
        if (explicit_injection(a, b) && explicit_injection(b, a)) {
            ++both;
            EXPECT_EQ(compare_measured(a, b), Sign::Zero);
            EXPECT_EQ(cardinality(sa), cardinality(sb));
        }
    }
    EXPECT_GT(both, 50);
}

TEST(Complement, Examples)
{
    const Measurement c = complement_measurement(canonical_measurement(range(1, G1)), canonical_measurement(range(1, 3)));
    EXPECT_EQ(c.target(), range(4, G1));
    EXPECT_EQ(c.mu(), G1 - 3);
    EXPECT_EQ(c.mu() + 3, G1);

    const Measurement d = complement_measurement(canonical_measurement(range(1, 5)), canonical_measurement(range(2, 4)));
    EXPECT_EQ(d.target(), make_set({{1, 1}, {5, 5}}));
    EXPECT_EQ(d.mu(), GrossNumber(2));
    EXPECT_EQ(d, min_extraction_measurement(make_set({{1, 1}, {5, 5}})));

    EXPECT_EQ(error_of([] {
                  complement_measurement(canonical_measurement(range(1, 5)), canonical_measurement(range(1, 5)));
              }),
              Errc::EmptySet);
    EXPECT_EQ(error_of([] {
                  complement_measurement(canonical_measurement(range(1, 5)), canonical_measurement(range(4, 6)));
              }),
              Errc::NotASubset);
}

TEST(Complement, ProperSubsetsLeavePositiveRemainder)
{
    testing::Rng rng(35);
    for (int round = 0; round < 300; ++round) {
        const IntervalSet e = testing::random_symbolic_set(rng);
        const IntervalSet a = e & testing::random_symbolic_set(rng);
        if (a.empty() || a == e) {
            continue;
        }
        const Measurement me = canonical_measurement(e);
        const Measurement ma = canonical_measurement(a);
        const Measurement c = complement_measurement(me, ma);
        EXPECT_EQ(cmp(c.mu(), 0), Sign::Positive);
        EXPECT_EQ(cmp(ma.mu(), me.mu()), Sign::Negative);
        EXPECT_EQ(c.mu(), me.mu() - ma.mu());
        if (e.is_finite()) {
            EXPECT_EQ(c, min_extraction_measurement(e - a));
        }
    }
}

TEST(IntersectionSplit, Examples)
{
    const auto s = intersection_split(canonical_measurement(range(1, G1)), canonical_measurement(range(2, G1 + 1)));
    EXPECT_EQ(s.only_a.target(), range(1, 1));
    EXPECT_EQ(s.only_b.target(), range(G1 + 1, G1 + 1));
    EXPECT_EQ(s.only_a.mu(), GrossNumber(1));
    EXPECT_EQ(s.only_b.mu(), GrossNumber(1));

    const auto f = intersection_split(canonical_measurement(range(1, 6)), canonical_measurement(range(4, 9)));
    EXPECT_EQ(f.only_a.target(), range(1, 3));
    EXPECT_EQ(f.only_b.target(), range(7, 9));
    EXPECT_EQ(f.only_a.mu(), GrossNumber(3));
    EXPECT_EQ(f.only_b.mu(), GrossNumber(3));
}

TEST(IntersectionSplit, NamesTheFailedPrecondition)
{
    const auto detail_of = [](const IntervalSet& a, const IntervalSet& b) -> std::string {
        try {
            intersection_split(canonical_measurement(a), canonical_measurement(b));
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::PreconditionViolated);
            return e.detail();
        }
        return "";
    };
    EXPECT_EQ(detail_of(range(1, 6), range(1, 6)), "A≠B");
    EXPECT_EQ(detail_of(range(1, 6), range(1, 7)), "#A=#B");
    EXPECT_EQ(detail_of(range(1, 3), range(4, 6)), "A∩B≠∅");
}

TEST(Serialization, TextAndJsonRoundTrip)
{
    const Measurement m = canonical_measurement(make_set({{1, 2}, {4, G1}}));
    const std::string text = measurement_to_text(m);
    EXPECT_EQ(text, "mu ①-1\ntarget [1..2] | [4..①]\npiece 1 2 0\npiece 3 ①-1 1\n");
    EXPECT_EQ(measurement_from_text(text), m);
    EXPECT_EQ(measurement_from_text(measurement_to_text(m, Glyph::Ascii)), m);
    EXPECT_EQ(measurement_from_json(measurement_to_json(m)), m);

    testing::Rng rng(36);
    for (int round = 0; round < 100; ++round) {
        const Measurement r = canonical_measurement(testing::random_symbolic_set(rng));
        EXPECT_EQ(measurement_from_text(measurement_to_text(r)), r);
        EXPECT_EQ(measurement_from_json(measurement_to_json(r, Glyph::Ascii, 2)), r);
    }
}

TEST(Serialization, RejectsBrokenRecords)
{
    EXPECT_THROW(measurement_from_text("mu 2\ntarget [1..2]\npiece 1 x 0\n"), SyntaxError);
    EXPECT_EQ(error_of([] { measurement_from_text("mu 3\ntarget [1..2]\npiece 1 2 0\n"); }), Errc::NotABijection);
    EXPECT_THROW(measurement_from_json("{\"mu\": 1"), Error);
}

TEST(NonStandardContrast, InnerSegmentCannotHaveMuKappa)
{
    EXPECT_EQ(cmp(cardinality(range(2, G1 - 1)), G1), Sign::Negative);
    EXPECT_EQ(canonical_measurement(range(2, G1 - 1)).mu(), G1 - 2);
    EXPECT_EQ(error_of([] { Measurement::make(G1, {{{1, G1}, 1}}, range(2, G1 - 1)); }), Errc::NotABijection);
}

} // namespace
} // namespace gross
