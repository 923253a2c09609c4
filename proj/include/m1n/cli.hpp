#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace m1n::cli {

// Runs the command line given argv-style arguments (program name excluded).
// Exit code 0 on success or a passing verification, 1 on a verification
// failure, 2 on a usage error. stdout carries results, stderr diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace m1n::cli
