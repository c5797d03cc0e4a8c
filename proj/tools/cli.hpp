#pragma once

#include <string>
#include <vector>

namespace cassini::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kViolations = 3,
};

/// Environment variable holding the default seed for `verify`.
inline constexpr const char* kSeedEnv = "CASSINI_SEED";

struct Result {
  int status = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
Result run(const std::vector<std::string>& args);

}  // namespace cassini::cli
