#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slelab::cli {

enum ExitCode { kOk = 0, kUsage = 1, kNumeric = 2, kIdentity = 3 };

/// Runs `sle-lab` with the given arguments (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slelab::cli
