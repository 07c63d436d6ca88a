#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallbc {

enum class ErrorCode {
  NonPositiveDensity,
  NonPositivePressure,
  NonUnitNormal,
  NonzeroMeanNormalVelocity,
  VacuumLimitExceeded,
  GammaOutOfRange,
  VacuumGenerated,
  NoConvergence,
  NotAMirrorPair,
  InvalidState,
  InvalidConfig,
  ConfigParseError,
  BlowUp,
  IoError,
  InvalidRange,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a time integration produces NaN or an unphysical nodal state.
class BlowUpError : public Error {
 public:
  BlowUpError(double time, int element, int node, const std::string& detail);

  double time() const noexcept { return time_; }
  int element() const noexcept { return element_; }
  int node() const noexcept { return node_; }

 private:
  double time_;
  int element_;
  int node_;
};

}  // namespace wallbc
