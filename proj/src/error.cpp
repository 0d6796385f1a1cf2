#include "momat/error.hpp"

namespace momat {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateName: return "duplicate-name";
        case ErrorCode::NotFound: return "not-found";
        case ErrorCode::DanglingEndpoint: return "dangling-endpoint";
        case ErrorCode::PayloadKindMismatch: return "payload-kind-mismatch";
        case ErrorCode::CodomainMismatch: return "codomain-mismatch";
        case ErrorCode::DomainMismatch: return "domain-mismatch";
        case ErrorCode::NonTotalMap: return "non-total-map";
        case ErrorCode::NegativeEndowment: return "negative-endowment";
        case ErrorCode::InsufficientBalance: return "insufficient-balance";
        case ErrorCode::UnitMismatch: return "unit-mismatch";
        case ErrorCode::ConservationViolation: return "conservation-violation";
        case ErrorCode::ValidationFailure: return "validation-failure";
        case ErrorCode::LawCheckFailure: return "law-check-failure";
        case ErrorCode::InvalidParameter: return "invalid-parameter";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::ParseError: return "parse-error";
    }
    return "unknown";
}

}  // namespace momat
