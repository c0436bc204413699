#pragma once

#include <ostream>

namespace xh {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Entry point of the xh tool. Writes results to out (or --output) and
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xh
