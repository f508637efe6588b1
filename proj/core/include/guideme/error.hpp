#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace guideme {

enum class ErrorCode {
  kInvalidArgument,
  kNotFound,
  kParseError,
  kValidationError,
  kDecodeError,
  kInvalidState,
  kIoError,
  kPayloadTooLarge,
  // Resolution outcomes a client is expected to act on.
  kGpsActivationRequired,
  kPermissionRequired,
  kNotAtKnownPlace,
  kUnrecognizedScene,
  kLabelWithoutPlace,
};

/// Machine-readable snake_case name, as used in service error bodies.
std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace guideme
