#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace khov::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kComputation = 2;
inline constexpr int kSuiteFailure = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khov::cli
