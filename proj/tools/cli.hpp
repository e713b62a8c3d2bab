#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace attsteer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one subcommand. `args` excludes the program name. Diagnostics go to
/// `err`, results to `out`. Returns 0, 2 (bad usage, config or input) or 3
/// (numeric failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace attsteer
