#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace momat {

enum class ErrorCode {
    DuplicateName,
    NotFound,
    DanglingEndpoint,
    PayloadKindMismatch,
    CodomainMismatch,
    DomainMismatch,
    NonTotalMap,
    NegativeEndowment,
    InsufficientBalance,
    UnitMismatch,
    ConservationViolation,
    ValidationFailure,
    LawCheckFailure,
    InvalidParameter,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace momat
