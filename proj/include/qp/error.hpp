#pragma once

#include <stdexcept>
#include <string>

namespace qp {

enum class ErrorCode {
    CAP_EXCEEDED,
    TANGENCY,
    OVERLAP,
    DEGENERATE,
    MISSING_CONSTANT,
    MULTIPLE_CROSSINGS,
    COINCIDENT_CROSSINGS,
    NOT_CROSSING,
    DUPLICATE_X,
    NOT_A_POSET,
    PRECONDITION,
    HYPOTHESIS_VIOLATED,
    RETRIES_EXHAUSTED,
    BAD_INPUT,
};

const char* to_string(ErrorCode c);

/// Domain error carrying one of the contract error codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qp
