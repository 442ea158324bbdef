#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tstar::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerifyMismatch = 1,
  kParseError = 2,
  kValidationError = 3,
  kResourceLimit = 4,
};

inline constexpr std::size_t kDefaultNaiveSizeCap = 200;

/// Entry point behind the tstar executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tstar::cli
