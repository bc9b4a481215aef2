#pragma once

#include <string>
#include <vector>

namespace posetkit::cli {

struct Output {
  /// 0 ran, 1 error, 2 an --expect mismatch or a failed verification.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures output.
Output run(std::vector<std::string> args);

}  // namespace posetkit::cli
