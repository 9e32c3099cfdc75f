#ifndef POWERINDEX_CLI_HPP
#define POWERINDEX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace powerindex {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitVerificationFailed = 4;

/// Runs one command line. args excludes the program name. Results go to
/// `out` unless an --out path is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace powerindex

#endif  // POWERINDEX_CLI_HPP
