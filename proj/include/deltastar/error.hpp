#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltastar {

// Stable, machine-readable error categories. The string form is part of the
// CLI contract.
enum class ErrorCode {
    invalid_argument,
    not_prime,
    empty_set,
    resource_exhausted,
    overflow,
    insufficient_cardinality,
    extraction_failed,
    no_witness,
    indeterminate,
    parse_error,
    duplicate_element,
    io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace deltastar
