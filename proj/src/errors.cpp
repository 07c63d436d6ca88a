#include "wallbc/errors.hpp"

#include <sstream>

namespace wallbc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::NonPositivePressure: return "NonPositivePressure";
    case ErrorCode::NonUnitNormal: return "NonUnitNormal";
    case ErrorCode::NonzeroMeanNormalVelocity: return "NonzeroMeanNormalVelocity";
    case ErrorCode::VacuumLimitExceeded: return "VacuumLimitExceeded";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::VacuumGenerated: return "VacuumGenerated";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotAMirrorPair: return "NotAMirrorPair";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::BlowUp: return "BlowUp";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

namespace {

std::string with_code(ErrorCode code, const std::string& message) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  return out;
}

std::string blow_up_message(double time, int element, int node,
                            const std::string& detail) {
  std::ostringstream os;
  os.precision(10);
  os << "solution blew up at t=" << time << " (element " << element << ", node "
     << node << "): " << detail;
  return os.str();
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(with_code(code, message)), code_(code) {}

BlowUpError::BlowUpError(double time, int element, int node,
                         const std::string& detail)
    : Error(ErrorCode::BlowUp, blow_up_message(time, element, node, detail)),
      time_(time),
      element_(element),
      node_(node) {}

}  // namespace wallbc
