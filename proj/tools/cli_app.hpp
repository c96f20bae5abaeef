#pragma once

#include <string>
#include <vector>

namespace hopfforge::cli {

/// exit codes: 0 all checks pass, 1 check failure, 2 malformed input / usage
int run(const std::vector<std::string>& args);

}  // namespace hopfforge::cli
