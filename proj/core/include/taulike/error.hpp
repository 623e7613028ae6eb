#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taulike {

enum class ErrorCode {
  CycleError,
  UnknownIdError,
  DuplicateIdError,
  MissingPartError,
  FiniteDomainEnd,
  OracleMissing,
  ClassifierInconsistent,
  NotStabilized,
  NotAnExtension,
  NotInjective,
  HorizonTooSmall,
  PrefixTooShort,
  TooLarge,
  KindMismatch,
  ParseError,
  InvalidArgument,
};

/// Stable machine-readable name, e.g. "CycleError".
std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace taulike
