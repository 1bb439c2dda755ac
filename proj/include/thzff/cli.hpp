#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thzff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInvalidInput = 2;

/// Entry point of the thzff command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thzff
