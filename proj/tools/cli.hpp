#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ranstrat::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 2;
inline constexpr int kInconclusive = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ranstrat::cli
