#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace celef {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitInternal = 3 };

/// Exit code for an exception escaping a subcommand: parse, degree and
/// usage errors map to 1, validation failures to 2, anything else to 3.
int exit_code_for(const std::exception& e);
std::string describe_error(const std::exception& e, const std::string& input);

/// Entry point of the command-line tool; `args` excludes the program name.
/// The thread count for `suite` comes from CELEF_THREADS when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace celef
