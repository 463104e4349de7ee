#ifndef DWKIT_TOOLS_CLI_HPP
#define DWKIT_TOOLS_CLI_HPP

#include <ostream>

namespace dwkit::cli {

/// Exit codes: 0 success, 1 bad input or usage, 2 domain error, 3 failed verification.
enum ExitCode : int { kOk = 0, kInputError = 1, kDomainError = 2, kVerifyFailed = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwkit::cli

#endif  // DWKIT_TOOLS_CLI_HPP
