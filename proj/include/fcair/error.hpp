#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcair {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    validation_error,
    io_error,
    unsupported_version,
    corruption,
    invalid_query,
    no_known_terms,
    no_ontology,
    not_found,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported with this exception; code() is the
// machine-readable part surfaced by the CLI and the HTTP API.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fcair
