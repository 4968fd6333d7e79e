#include "fcair/error.hpp"

namespace fcair {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::validation_error: return "validation_error";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::unsupported_version: return "unsupported_version";
        case ErrorCode::corruption: return "corruption";
        case ErrorCode::invalid_query: return "invalid_query";
        case ErrorCode::no_known_terms: return "no_known_terms";
        case ErrorCode::no_ontology: return "no_ontology";
        case ErrorCode::not_found: return "not_found";
    }
    return "unknown";
}

}  // namespace fcair
