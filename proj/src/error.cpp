#include "epikin/error.hpp"

namespace epikin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::LambdaZero: return "LambdaZero";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::StepSizeInsufficient: return "StepSizeInsufficient";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BetaZero:
    case ErrorKind::LambdaZero:
    case ErrorKind::NonFinite:
    case ErrorKind::StepSizeInsufficient:
    case ErrorKind::PreconditionViolation:
      return 3;
    case ErrorKind::IoError:
      return 4;
    case ErrorKind::GridMismatch:
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::UnknownField:
      return 2;
  }
  return 1;
}

}  // namespace epikin
