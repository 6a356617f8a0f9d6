#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splinefit {

// Exit statuses of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNumericError = 2;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splinefit
