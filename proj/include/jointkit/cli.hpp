#pragma once

#include <string>
#include <vector>

namespace jointkit {

/// Command dispatch for the jointkit tool. Exit status: 0 pass, 1 assertion
/// failure, 2 usage or configuration error.
int run_command(const std::vector<std::string>& args);

} // namespace jointkit
