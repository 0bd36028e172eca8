#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace framecoh::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
/// Returns 0 on success or pass, 1 when an experiment fails, 2 on usage, config or input errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Reads a key=value config file into command-line tokens. Blank lines and lines starting
/// with '#' are skipped; one-letter keys become "-k value", longer keys "--key=value".
std::vector<std::string> config_tokens(const std::string& path);

}  // namespace framecoh::cli
