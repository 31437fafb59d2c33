#include "gross/numeral_system.hpp"

#include <charconv>
#include <vector>

#include "gross/error.hpp"

namespace gross {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Integer power_of(unsigned base, unsigned exponent)
{
    Integer out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

// Largest magnitude with `digits` decimal digits.
Integer digit_limit(unsigned digits) { return power_of(10, digits) - 1; }

Integer magnitude(const Integer& v) { return v < 0 ? Integer(-v) : v; }

bool fits_budget(const GrossBudget& b, const GrossNumber& x)
{
    if (x.terms().size() > b.max_terms) {
        return false;
    }
    const Integer coeff_max = digit_limit(b.coeff_digits);
    const Integer exp_max = digit_limit(b.exp_digits);
    for (const auto& t : x.terms()) {
        if (boost::multiprecision::denominator(t.exponent) != 1 ||
            magnitude(boost::multiprecision::numerator(t.exponent)) > exp_max) {
            return false;
        }
        if (magnitude(boost::multiprecision::numerator(t.coefficient)) > coeff_max ||
            boost::multiprecision::denominator(t.coefficient) > coeff_max) {
            return false;
        }
    }
    return true;
}

} // namespace

NumeralSystem::NumeralSystem(Kind kind) : kind_(std::move(kind))
{
    std::visit(overloaded{
                   [](const Piraha&) {},
                   [](const BoundedFinite& k) {
                       if (k.digits == 0 || k.digits > kMaxDigits || k.base < 2) {
                           throw Error(Errc::InvalidArgument, "finite system needs 1 ≤ digits ≤ 4096 and base ≥ 2");
                       }
                   },
                   [](const GrossBudget& k) {
                       if (k.max_terms == 0 || k.coeff_digits == 0 || k.exp_digits == 0 ||
                           k.coeff_digits > kMaxDigits || k.exp_digits > kMaxDigits) {
                           throw Error(Errc::InvalidArgument, "gross budget entries must be in 1..4096");
                       }
                   },
               },
               kind_);
}

bool expressible(const NumeralSystem& sys, const GrossNumber& x)
{
    return std::visit(overloaded{
                          [&](const Piraha&) { return x == GrossNumber(1) || x == GrossNumber(2); },
                          [&](const BoundedFinite& k) {
                              if (!x.is_rational()) {
                                  return false;
                              }
                              const Rational v = x.to_rational();
                              if (boost::multiprecision::denominator(v) != 1) {
                                  return false;
                              }
                              return magnitude(boost::multiprecision::numerator(v)) <= power_of(k.base, k.digits) - 1;
                          },
                          [&](const GrossBudget& k) { return fits_budget(k, x); },
                      },
                      sys.kind());
}

GrossNumber max_finite(const NumeralSystem& sys)
{
    return std::visit(overloaded{
                          [](const Piraha&) { return GrossNumber(2); },
                          [](const BoundedFinite& k) { return GrossNumber(power_of(k.base, k.digits) - 1); },
                          [](const GrossBudget& k) { return GrossNumber(digit_limit(k.coeff_digits)); },
                      },
                      sys.kind());
}

GrossNumber min_infinite(const NumeralSystem& sys)
{
    const auto* budget = std::get_if<GrossBudget>(&sys.kind());
    if (budget == nullptr) {
        throw Error(Errc::NoInfiniteNumerals, describe(sys));
    }
    // Lowest infinite leading term is ①·(1/M); the only lower power an
    // integer may carry is ①^0 with an integral coefficient, at least −M.
    const Integer m = digit_limit(budget->coeff_digits);
    GrossNumber psi = GrossNumber::monomial(1, Rational(1, m));
    if (budget->max_terms >= 2) {
        psi -= GrossNumber(m);
    }
    return psi;
}

Measurement measure_in(const NumeralSystem& sys, const IntervalSet& s)
{
    Measurement m = canonical_measurement(s);
    std::vector<const GrossNumber*> written{&m.mu()};
    for (const auto& p : m.pieces()) {
        written.push_back(&p.domain.lo);
        written.push_back(&p.domain.hi);
        if (!p.offset.is_zero()) {
            written.push_back(&p.offset);
        }
    }
    for (const auto& part : m.target().parts()) {
        written.push_back(&part.lo);
        written.push_back(&part.hi);
    }
    for (const GrossNumber* value : written) {
        if (!expressible(sys, *value)) {
            throw Error(Errc::NotExpressible, format_numeral(*value));
        }
    }
    return m;
}

NumeralSystem parse_system(std::string_view descriptor)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t colon = descriptor.find(':', start);
        fields.push_back(descriptor.substr(start, colon - start));
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    auto number = [&](std::size_t index) {
        unsigned value = 0;
        const auto field = fields[index];
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
            std::size_t at = 0;
            for (std::size_t i = 0; i < index; ++i) {
                at += fields[i].size() + 1;
            }
            throw SyntaxError(at, "expected an unsigned integer in system descriptor");
        }
        return value;
    };
    if (fields[0] == "piraha" && fields.size() == 1) {
        return NumeralSystem(Piraha{});
    }
    if (fields[0] == "finite" && fields.size() == 3) {
        return NumeralSystem(BoundedFinite{number(1), number(2)});
    }
    if (fields[0] == "gross" && fields.size() == 4) {
        return NumeralSystem(GrossBudget{number(1), number(2), number(3)});
    }
    throw SyntaxError(0, "unknown system descriptor '" + std::string(descriptor) + "'");
}

std::string describe(const NumeralSystem& sys)
{
    return std::visit(overloaded{
                          [](const Piraha&) { return std::string("piraha"); },
                          [](const BoundedFinite& k) {
                              return "finite:" + std::to_string(k.digits) + ":" + std::to_string(k.base);
                          },
                          [](const GrossBudget& k) {
                              return "gross:" + std::to_string(k.max_terms) + ":" + std::to_string(k.coeff_digits) +
                                     ":" + std::to_string(k.exp_digits);
                          },
                      },
                      sys.kind());
}

} // namespace gross
