#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsym::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// Runs the qsym command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsym::cli
