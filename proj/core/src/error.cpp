#include "gross/error.hpp"

namespace gross {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::NotExact: return "NotExact";
    case Errc::NonIntegerEndpoint: return "NonIntegerEndpoint";
    case Errc::EmptyIntervalRejected: return "EmptyIntervalRejected";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotSubsetOfRange: return "NotSubsetOfRange";
    case Errc::NonIntegerOffset: return "NonIntegerOffset";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::OverlappingTargets: return "OverlappingTargets";
    case Errc::NotABijection: return "NotABijection";
    case Errc::NotASubset: return "NotASubset";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NoFiniteNumerals: return "NoFiniteNumerals";
    case Errc::NoInfiniteNumerals: return "NoInfiniteNumerals";
    case Errc::NotExpressible: return "NotExpressible";
    case Errc::BelowRange: return "BelowRange";
    case Errc::NotFinite: return "NotFinite";
    }
    return "Unknown";
}

namespace {

std::string render(Errc code, const std::string& detail)
{
    std::string out{errc_name(code)};
    if (!detail.empty()) {
        out += '(';
        out += detail;
        out += ')';
    }
    return out;
}

} // namespace

Error::Error(Errc code, std::string detail)
    : std::runtime_error(render(code, detail)), code_(code), detail_(std::move(detail))
{
}

SyntaxError::SyntaxError(std::size_t position, std::string detail)
    : Error(Errc::SyntaxError, "at " + std::to_string(position) + ": " + detail),
      position_(position)
{
}

} // namespace gross
