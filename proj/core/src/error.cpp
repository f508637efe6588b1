#include "guideme/error.hpp"

namespace guideme {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kValidationError: return "validation_error";
    case ErrorCode::kDecodeError: return "decode_error";
    case ErrorCode::kInvalidState: return "invalid_state";
    case ErrorCode::kIoError: return "io_error";
    case ErrorCode::kPayloadTooLarge: return "payload_too_large";
    case ErrorCode::kGpsActivationRequired: return "gps_activation_required";
    case ErrorCode::kPermissionRequired: return "permission_required";
    case ErrorCode::kNotAtKnownPlace: return "not_at_known_place";
    case ErrorCode::kUnrecognizedScene: return "unrecognized_scene";
    case ErrorCode::kLabelWithoutPlace: return "label_without_place";
  }
  return "unknown";
}

}  // namespace guideme
