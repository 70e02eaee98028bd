#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satwet::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,         // bad flags, unknown keys, unparsable config
  kInfeasible = 3,         // solver hit a search cap or found nothing feasible
  kValidationFailed = 4,
};

/// Entry point shared by the executable and the tests. Failures print one
/// line `satwet: error: <kind>: <reason>` to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ValidationOptions {
  int energy_samples = 1000;
  int identity_samples = 100;
  std::size_t channel_samples = 1'000'000;
  std::uint64_t seed = 20240601;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed form vs quadrature over random passes, the zero-azimuth identity
/// and the channel Monte-Carlo mean.
std::vector<CheckOutcome> run_validation(const ValidationOptions& options);

}  // namespace satwet::cli
