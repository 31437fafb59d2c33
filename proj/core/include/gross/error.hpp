#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gross {

/// Every failure raised by the library carries one of these names; the CLI
/// surfaces them verbatim.
enum class Errc {
    SyntaxError,
    InvalidArgument,
    DivideByZero,
    NotExact,
    NonIntegerEndpoint,
    EmptyIntervalRejected,
    EmptySet,
    NotSubsetOfRange,
    NonIntegerOffset,
    BoundExceeded,
    OverlappingTargets,
    NotABijection,
    NotASubset,
    PreconditionViolated,
    NoFiniteNumerals,
    NoInfiniteNumerals,
    NotExpressible,
    BelowRange,
    NotFinite,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail = {});

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

/// A malformed numeral or set expression; `position` is a byte offset into the
/// input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string detail);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace gross
