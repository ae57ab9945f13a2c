#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcoh {

inline constexpr const char* kEngineVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitHypothesis = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcoh
