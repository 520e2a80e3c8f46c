#pragma once

#include <string>
#include <vector>

namespace coarse {

/// Runs one CLI invocation (args exclude the program name). Returns the
/// process exit code: 0 when a report was produced (including FAIL
/// verdicts), nonzero on operational errors.
int run_cli(const std::vector<std::string>& args);

} // namespace coarse
