#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace azw::cli {

/// Process exit codes. Nonzero iff the status is not "ok".
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kDomainError = 2, kUsage = 64 };

/// Runs one command (`args` excludes the program name). The JSON document goes
/// to `out`; usage errors and the wall-clock line go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace azw::cli
