#pragma once

#include <string>
#include <vector>

namespace stabletool {

/// Dispatch one subcommand. Returns 0 on success, 1 when a verification ran
/// and failed its tolerance, 2 on usage or config errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace stabletool
