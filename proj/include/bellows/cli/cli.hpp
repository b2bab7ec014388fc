#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellows::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kPropertyFailure = 2,
  kIoFailure = 3,
};

/// Runs one command line (without the program name). Reports go to `out`
/// (or to --output), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellows::cli
