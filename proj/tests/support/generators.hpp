#pragma once

// Hand-rolled random generators for property tests. Every generator takes
// the engine by reference so a fixed seed reproduces a whole test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gross/gnum.hpp"
#include "gross/sets.hpp"

namespace gross::testing {

using Rng = std::mt19937_64;

/// Value of a finite integer gross-number that fits a long long.
inline long long to_ll(const GrossNumber& x)
{
    return static_cast<long long>(boost::multiprecision::numerator(x.to_rational()));
}

inline long long uniform(Rng& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long long max_num = 9, long long max_den = 4)
{
    return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

/// Raw term list (possibly repeated exponents, zero coefficients).
inline std::vector<Term> random_terms(Rng& rng, int max_terms = 5)
{
    std::vector<Term> terms;
    const int n = static_cast<int>(uniform(rng, 0, max_terms));
    for (int i = 0; i < n; ++i) {
        Rational exponent = uniform(rng, -2, 3);
        if (uniform(rng, 0, 5) == 0) {
            exponent += Rational(1, 2);
        }
        terms.push_back({exponent, random_rational(rng)});
    }
    return terms;
}

inline GrossNumber random_gross(Rng& rng, int max_terms = 4)
{
    return GrossNumber::from_terms(random_terms(rng, max_terms));
}

/// Gross-integer a·① + b with small a and b.
inline GrossNumber random_gross_integer(Rng& rng, long long span = 50)
{
    return GrossNumber::monomial(1, uniform(rng, -2, 2)) + GrossNumber(uniform(rng, -span, span));
}

/// Random nonempty finite set inside [1..n].
inline IntervalSet random_finite_set(Rng& rng, long long n, int max_parts = 6)
{
    std::vector<GrossInterval> parts;
    const int k = static_cast<int>(uniform(rng, 1, max_parts));
    for (int i = 0; i < k; ++i) {
        const long long lo = uniform(rng, 1, n);
        const long long hi = std::min(n, lo + uniform(rng, 0, n / 4 + 1));
        parts.push_back({lo, hi});
    }
    return make_set(parts);
}

/// Random nonempty set inside [1..①] mixing finite blocks and blocks near ①
/// (endpoints ①−k) and in the middle (①/2 ± k).
inline IntervalSet random_symbolic_set(Rng& rng, int max_parts = 4)
{
    const GrossNumber one = GrossNumber::grossone();
    const GrossNumber half = GrossNumber::monomial(1, Rational(1, 2));
    std::vector<GrossInterval> parts;
    const int k = static_cast<int>(uniform(rng, 1, max_parts));
    for (int i = 0; i < k; ++i) {
        const long long a = uniform(rng, 1, 40);
        const long long len = uniform(rng, 0, 20);
        switch (uniform(rng, 0, 3)) {
        case 0: parts.push_back({a, a + len}); break;
        case 1: parts.push_back({one - a - len + 1, one - a + 1}); break;
        case 2: parts.push_back({half - a, half - a + len}); break;
        default: parts.push_back({a, one - uniform(rng, 0, 40)}); break;
        }
    }
    return make_set(parts);
}

} // namespace gross::testing
