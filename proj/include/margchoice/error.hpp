#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace margchoice {

enum class ErrorCode {
  Parse,
  InvalidUniverse,
  EmptyMenu,
  NegativeProbability,
  SumNotOne,
  UnknownAlternative,
  UniverseMismatch,
  NotConvex,
  TooManyOrders,
  NotInCore,
  NotRationalizable,
  PairSupportMissing,
  DegenerateDenominator,
  PairCoverageMissing,
  NotInterior,
  NoConvergence,
  SameAlternative,
  SingletonSupportMissing,
  SupportOutsideCollection,
  NotPotentiallyRationalizable,
  TooLarge,
  TieEncountered,
  InvalidParameters,
  Internal,
};

std::string_view error_name(ErrorCode code);

/// The single exception type thrown by the library. `what()` carries the
/// human-readable certificate (offending menu, exact deviation, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace margchoice
