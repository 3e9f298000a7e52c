#pragma once

#include <string>
#include <vector>

namespace pauliest::cli {

enum ExitCode : int { kOk = 0, kInvalidConfig = 1, kRuntimeFailure = 2, kIoFailure = 3 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args);

/// Comma-separated decimal list; throws std::invalid_argument.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace pauliest::cli
