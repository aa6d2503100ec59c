#include "planechroma/errors.hpp"

namespace planechroma {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::CoincidentCircles: return "CoincidentCircles";
        case ErrorCode::DegenerateSegment: return "DegenerateSegment";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NonpositiveD: return "NonpositiveD";
        case ErrorCode::InputTooLarge: return "InputTooLarge";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::MissingUpperBound: return "MissingUpperBound";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace planechroma
