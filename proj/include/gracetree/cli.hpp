#pragma once

#include <string>
#include <vector>

namespace gracetree {

// Command-line front end; returns the process exit code (0 success,
// 1 domain failure, 2 usage error).
int run_cli(const std::vector<std::string>& args);

}  // namespace gracetree
