#include "deltastar/error.hpp"

namespace deltastar {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::not_prime: return "not_prime";
        case ErrorCode::empty_set: return "empty_set";
        case ErrorCode::resource_exhausted: return "resource_exhausted";
        case ErrorCode::overflow: return "overflow";
        case ErrorCode::insufficient_cardinality: return "insufficient_cardinality";
        case ErrorCode::extraction_failed: return "extraction_failed";
        case ErrorCode::no_witness: return "no_witness";
        case ErrorCode::indeterminate: return "indeterminate";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::duplicate_element: return "duplicate_element";
        case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

}  // namespace deltastar
