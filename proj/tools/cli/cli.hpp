#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik::cli {

enum ExitCode { kOk = 0, kUsage = 2, kInconclusive = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
