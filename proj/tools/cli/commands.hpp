#pragma once

#include <string>
#include <vector>

namespace cognates::cli {

/// Entry point of the `cogdetect` tool. Returns the process exit code:
/// 0 on success, 1 on a runtime failure, 2 on a usage error.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

}  // namespace cognates::cli
