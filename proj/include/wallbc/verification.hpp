#pragma once

// Self-check suite run by `wallbc verify`: each property pairs an
// implementation route with an independent one (closed form vs matrix
// algebra, wall formula vs general Riemann solver, finite differences, ...).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wallbc::verify {

struct VerifyOptions {
  std::uint64_t seed = 20190325;
  int trials = 1;  ///< randomized properties are repeated with fresh draws
  /// Mutation check: flips the sign of the Roe threshold used by the Roe sign property.
  bool inject_roe_threshold_fault = false;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool all_passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace wallbc::verify
