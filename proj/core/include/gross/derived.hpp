#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gross/gnum.hpp"

namespace gross {

/// A strictly increasing function on the positive integers, drawn from a
/// small catalog: x^k, b^x and a·x + c (a > 0).
class MonotoneFn {
public:
    struct Pow {
        unsigned k;
        friend bool operator==(const Pow&, const Pow&) = default;
    };
    struct ExpBase {
        unsigned base;
        friend bool operator==(const ExpBase&, const ExpBase&) = default;
    };
    struct Affine {
        Rational slope;
        Rational intercept;
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    using Kind = std::variant<Pow, ExpBase, Affine>;

    /// k ≥ 2
    static MonotoneFn pow(unsigned k);
    /// base ≥ 2
    static MonotoneFn exp_base(unsigned base);
    /// slope > 0
    static MonotoneFn affine(Rational slope, Rational intercept);

    const Kind& kind() const noexcept { return kind_; }

    /// g(x) as a gross-number, or nothing when the catalog cannot write it
    /// (b^x for non-finite x).
    std::optional<GrossNumber> evaluate(const GrossNumber& x) const;

    /// Sign of g(x) − κ without materializing huge finite powers. Empty when
    /// g(x) is not evaluable.
    std::optional<Sign> compare_at(const GrossNumber& x, const GrossNumber& kappa) const;

    friend bool operator==(const MonotoneFn&, const MonotoneFn&) = default;

private:
    explicit MonotoneFn(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// The unique positive integer x with g(x) ≤ κ < g(x+1). Held symbolically;
/// it takes no part in gross-number arithmetic.
struct DefinedNumeral {
    MonotoneFn g;
    GrossNumber kappa;

    friend bool operator==(const DefinedNumeral&, const DefinedNumeral&) = default;
};

/// Throws InvalidArgument unless κ is a positive integer, BelowRange when
/// κ < g(1).
DefinedNumeral define_by_inverse(const MonotoneFn& g, const GrossNumber& kappa);

/// The concrete value for finite κ, by doubling then bisection. Throws
/// NotFinite.
GrossNumber resolve_finite(const DefinedNumeral& d);

/// Partial comparison of d with a positive integer y: less iff κ < g(y),
/// greater iff g(y+1) ≤ κ, equivalent otherwise; unordered when g(y) or
/// g(y+1) cannot be evaluated.
std::partial_ordering cmp_defined(const DefinedNumeral& d, const GrossNumber& y);

/// g(x+1) − g(x), when evaluable.
std::optional<GrossNumber> increment_gap(const MonotoneFn& g, const GrossNumber& x);

/// Bounded store of defined numerals: only finitely many definitions may be
/// introduced.
class DefinitionRegistry {
public:
    explicit DefinitionRegistry(std::size_t capacity = 64) : capacity_(capacity) {}

    /// Throws BoundExceeded once `capacity` definitions exist.
    const DefinedNumeral& define(const MonotoneFn& g, const GrossNumber& kappa);

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }

private:
    std::size_t capacity_;
    std::vector<DefinedNumeral> entries_;
};

/// "sqrtfloor(κ)", "logfloor(b, κ)", "invfloor(pow k, κ)", "invfloor(exp b, κ)",
/// "invfloor(affine a c, κ)".
DefinedNumeral parse_defined(std::string_view text);
std::string format_defined(const DefinedNumeral& d, Glyph glyph = Glyph::Unicode);
std::string format_fn(const MonotoneFn& g);

} // namespace gross
