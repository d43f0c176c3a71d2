#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edst::cli {

enum ExitCode : int { ok = 0, usage = 1, input_error = 2, verification_failed = 3 };

// Runs the command line with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edst::cli
