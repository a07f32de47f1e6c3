#include "qp/error.hpp"

namespace qp {

const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::CAP_EXCEEDED: return "CAP_EXCEEDED";
        case ErrorCode::TANGENCY: return "TANGENCY";
        case ErrorCode::OVERLAP: return "OVERLAP";
        case ErrorCode::DEGENERATE: return "DEGENERATE";
        case ErrorCode::MISSING_CONSTANT: return "MISSING_CONSTANT";
        case ErrorCode::MULTIPLE_CROSSINGS: return "MULTIPLE_CROSSINGS";
        case ErrorCode::COINCIDENT_CROSSINGS: return "COINCIDENT_CROSSINGS";
        case ErrorCode::NOT_CROSSING: return "NOT_CROSSING";
        case ErrorCode::DUPLICATE_X: return "DUPLICATE_X";
        case ErrorCode::NOT_A_POSET: return "NOT_A_POSET";
        case ErrorCode::PRECONDITION: return "PRECONDITION";
        case ErrorCode::HYPOTHESIS_VIOLATED: return "HYPOTHESIS_VIOLATED";
        case ErrorCode::RETRIES_EXHAUSTED: return "RETRIES_EXHAUSTED";
        case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

}  // namespace qp
