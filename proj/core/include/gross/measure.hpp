#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gross/gnum.hpp"
#include "gross/sets.hpp"

namespace gross {

/// x ↦ x + offset on `domain`.
struct AffinePiece {
    GrossInterval domain;
    GrossNumber offset;

    GrossInterval image() const { return {domain.lo + offset, domain.hi + offset}; }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// An explicitly written bijection f : [1..μ] → target, given as
/// order-preserving shifts on consecutive blocks of indices.
///
/// Invariants (checked by make): the piece domains partition [1..μ] in
/// order, the piece images are pairwise disjoint and cover the target, hence
/// ♯target = μ. Pieces are kept merged: two neighbouring pieces never share
/// an offset.
class Measurement {
public:
    /// Validates and normalizes. Throws NotABijection naming the broken
    /// invariant.
    static Measurement make(GrossNumber mu, std::vector<AffinePiece> pieces, IntervalSet target);

    const GrossNumber& mu() const noexcept { return mu_; }
    std::span<const AffinePiece> pieces() const noexcept { return pieces_; }
    const IntervalSet& target() const noexcept { return target_; }

    /// f(k) for k ∈ [1..μ]; InvalidArgument outside.
    GrossNumber apply(const GrossNumber& k) const;
    /// f⁻¹(y) for y in the target; InvalidArgument outside.
    GrossNumber inverse(const GrossNumber& y) const;

    friend bool operator==(const Measurement&, const Measurement&) = default;

private:
    Measurement() = default;

    GrossNumber mu_;
    std::vector<AffinePiece> pieces_;
    IntervalSet target_;
};

/// Order-preserving measurement: the k-th part of s receives the next block
/// of indices. Throws EmptySet.
Measurement canonical_measurement(const IntervalSet& s);

struct ExtractionOptions {
    /// Upper bound on literal min-extraction steps.
    std::uint64_t bound = 100'000;
};

/// Runs the construction f(1) = min A, f(n+1) = min A_n,
/// A_{n+1} = A_n \ {f(n+1)} step by step for finite sets. Sets with infinite
/// endpoints cannot be exhausted in finitely many steps; for them the closed
/// form (canonical_measurement) is returned. Throws EmptySet, BoundExceeded.
Measurement min_extraction_measurement(const IntervalSet& s, ExtractionOptions options = {});

/// Measurement of the union of two disjoint targets with μ = μA + μRest; the
/// second measurement's indices are shifted past μA. Throws OverlappingTargets.
Measurement concat(const Measurement& first, const Measurement& rest);

/// Composes m with a piecewise-shift bijection from m.target() onto some T,
/// giving a measurement of T with the same μ. Throws NotABijection.
Measurement transport(const Measurement& m, const std::vector<AffinePiece>& bijection);

/// Sign of μA − μB.
Sign compare_measured(const Measurement& a, const Measurement& b);

/// The injection g∘f⁻¹ from a.target() into b.target(), as pieces whose
/// domains partition a.target(). Present iff μA ≤ μB.
std::optional<std::vector<AffinePiece>> explicit_injection(const Measurement& a, const Measurement& b);

/// Measurement of E\A with μ = μE − μA. Throws NotASubset, EmptySet (A = E).
Measurement complement_measurement(const Measurement& whole, const Measurement& part);

struct SplitMeasurements {
    Measurement only_a; ///< A \ (A∩B)
    Measurement only_b; ///< B \ (A∩B)
};

/// For ♯A = ♯B, A∩B ≠ ∅, A ≠ B: measurements of both differences, which are
/// nonempty and equinumerous. Throws PreconditionViolated naming the clause.
SplitMeasurements intersection_split(const Measurement& a, const Measurement& b);

} // namespace gross
