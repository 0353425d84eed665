#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epikin {

enum class ErrorKind {
  BetaZero,
  LambdaZero,
  NonFinite,
  StepSizeInsufficient,
  GridMismatch,
  PreconditionViolation,
  ParseError,
  ValidationError,
  UnknownField,
  IoError,
};

/// Stable machine-readable name, e.g. "LambdaZero".
std::string_view to_string(ErrorKind kind);

/// Process exit status for a failure of this kind: 2 parse/validation,
/// 3 numerical, 4 I/O.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Grid index at which the failure was detected, when it is tied to one.
  std::optional<std::size_t> index() const noexcept { return index_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace epikin
