#ifndef QAPSEARCH_TOOLS_CLI_COMMANDS_H_
#define QAPSEARCH_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace qapsearch::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;  // I/O, parse or data error
inline constexpr int kExitUsage = 2;

// Environment variable consulted for the worker count when --workers is
// absent.
inline constexpr const char* kWorkersEnv = "QAPSEARCH_WORKERS";

// Runs `qapsearch <subcommand> [flags]`. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qapsearch::cli

#endif  // QAPSEARCH_TOOLS_CLI_COMMANDS_H_
