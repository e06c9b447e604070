#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpcusp {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a check ran and failed, or an internal error
inline constexpr int kExitValidation = 2;   // malformed input or usage error
inline constexpr int kExitNotSupported = 3; // input outside the implemented range

/**
 * Runs one command line (args excludes the program name). Each subcommand prints a JSON report
 * {"command", "inputs_digest", "exact", "result"}; errors go to `err` as JSON.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpcusp
