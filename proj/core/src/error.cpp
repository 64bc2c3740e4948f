#include "nonvanish/error.hpp"

namespace nonvanish {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::InternalNonInteger: return "INTERNAL_NON_INTEGER";
    case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::WindowExceeded: return "WINDOW_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::GridTooLarge: return "GRID_TOO_LARGE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace nonvanish
