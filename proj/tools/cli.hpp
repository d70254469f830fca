#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pell3::cli {

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2 };

// Runs one pell3 invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pell3::cli
