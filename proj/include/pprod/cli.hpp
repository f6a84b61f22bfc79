#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pprod::cli {

/// Exit codes: 0 success, 1 a checked inequality or cross-check failed,
/// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pprod::cli
