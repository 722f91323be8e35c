#ifndef WORDMAP_CLI_HPP
#define WORDMAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordmap {

inline constexpr const char* kToolVersion = "wordmap 0.1.0";

/// Exit codes: 0 success, 1 input error, 2 budget refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudget = 2;

/// Runs one CLI invocation (args excludes the program name). Reports go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wordmap

#endif
