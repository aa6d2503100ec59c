#pragma once

#include <stdexcept>
#include <string>

namespace planechroma {

enum class ErrorCode {
    CoincidentCircles,
    DegenerateSegment,
    SizeMismatch,
    NonpositiveD,
    InputTooLarge,
    UnknownName,
    DomainError,
    MissingUpperBound,
    PreconditionViolated,
    SearchExhausted,
    InvalidInput,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace planechroma
