#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevian {

enum class ErrorCode {
    ParseError,
    DivisionByZero,
    IncompatibleExtensions,
    Degenerate,
    AllZero,
    CoincidentArguments,
    InfiniteInput,
    NotCollinear,
    DependentSources,
    InfinitePoint,
    DegenerateMap,
    OnSideline,
    OnAnticomplementarySideline,
    DegenerateConfiguration,
    RankDeficient,
    DegenerateConic,
    NoSuchConic,
    NotPerspective,
    DegenerateQuadrangle,
    NotIncident,
    SelfConjugate,
    ExhaustedRejections,
    UnknownCheck,
    NeedsRationalSides,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cevian
