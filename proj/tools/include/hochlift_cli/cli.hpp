#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hochlift::cli {

/// Exit codes: 0 affirmative, 1 well-formed negative, 2 input or usage error.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kInputError = 2 };

/// Runs one command line (without the program name); the report goes to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hochlift::cli
