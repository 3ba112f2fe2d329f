#pragma once

#include <ostream>

namespace monotrick::cli {

/// Exit codes of every subcommand.
enum Exit : int { affirmative = 0, negative = 1, usage_error = 2, exhausted = 3 };

/// Runs the command line; output and diagnostics go to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monotrick::cli
