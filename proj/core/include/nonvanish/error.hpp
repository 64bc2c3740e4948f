#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonvanish {

enum class ErrorCode {
  PreconditionViolated,
  InternalNonInteger,
  ValidationFailed,
  WindowExceeded,
  ParseError,
  IoError,
  GridTooLarge,
};

/// Stable upper-case name, e.g. "WINDOW_EXCEEDED".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nonvanish
