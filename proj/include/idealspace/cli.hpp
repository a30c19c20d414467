#ifndef IDEALSPACE_CLI_HPP
#define IDEALSPACE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace idealspace::cli {

enum ExitCode : int { kOk = 0, kTheoremFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name). Output goes to out
/// unless --out is given; diagnostics go to err.
int execute(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace idealspace::cli

#endif  // IDEALSPACE_CLI_HPP
