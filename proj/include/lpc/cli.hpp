#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpc {

/// Runs the `lpccode` command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 failure (error object on `err`), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpc
