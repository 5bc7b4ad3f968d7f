#pragma once

// Command-line front end: bounds, verify, certify, gen.
//
// Exit codes: 0 success / pass, 1 verification or certification failure,
// 2 usage or parse error. REGEN_LOG sets the log level
// (trace, debug, info, warn, error, off; default warn).

#include <iosfwd>
#include <string>
#include <vector>

namespace regen {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// `args` excludes the program name. Report output goes to `out` unless
/// --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace regen
