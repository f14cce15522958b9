#pragma once

#include <ostream>

namespace lrb {

/// Dispatches the command line. Exit status: 0 for positive verdicts,
/// 1 for negative verdicts or failed checks, 2 for input errors.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrb
