#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "gross/gnum.hpp"
#include "gross/measure.hpp"
#include "gross/sets.hpp"

namespace gross {

/// Writes exactly 1 and 2.
struct Piraha {
    friend bool operator==(const Piraha&, const Piraha&) = default;
};

/// Integers with at most `digits` digits in `base`, and zero: a maxint-style
/// system.
struct BoundedFinite {
    unsigned digits;
    unsigned base;

    friend bool operator==(const BoundedFinite&, const BoundedFinite&) = default;
};

/// Gross-numbers with at most `max_terms` terms. Coefficient numerators and
/// denominators have at most `coeff_digits` decimal digits; exponents are
/// integers with at most `exp_digits` decimal digits.
struct GrossBudget {
    unsigned max_terms;
    unsigned coeff_digits;
    unsigned exp_digits;

    friend bool operator==(const GrossBudget&, const GrossBudget&) = default;
};

class NumeralSystem {
public:
    using Kind = std::variant<Piraha, BoundedFinite, GrossBudget>;

    /// Throws InvalidArgument for zero budgets, base < 2, or digit counts
    /// above kMaxDigits.
    NumeralSystem(Kind kind);

    static constexpr unsigned kMaxDigits = 4096;

    const Kind& kind() const noexcept { return kind_; }

    friend bool operator==(const NumeralSystem&, const NumeralSystem&) = default;

private:
    Kind kind_;
};

bool expressible(const NumeralSystem& sys, const GrossNumber& x);

/// φ_S: the greatest expressible finite positive integer.
GrossNumber max_finite(const NumeralSystem& sys);

/// ψ_S: the least expressible infinite positive integer. Throws
/// NoInfiniteNumerals for purely finite systems.
GrossNumber min_infinite(const NumeralSystem& sys);

/// canonical_measurement(s), provided the system can write μ, every domain
/// and target endpoint and every nonzero offset (a zero offset is the
/// identity and needs no numeral). Throws NotExpressible(value), EmptySet.
Measurement measure_in(const NumeralSystem& sys, const IntervalSet& s);

/// "piraha", "finite:<digits>:<base>", "gross:<terms>:<coeff_digits>:<exp_digits>".
NumeralSystem parse_system(std::string_view descriptor);
std::string describe(const NumeralSystem& sys);

} // namespace gross
