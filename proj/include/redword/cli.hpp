// Command-line surface. All commands are pure library calls plus formatting,
// so tests can drive them in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redword {

/// Exit codes: 0 success, 2 input validation failure, 3 cap or truncation,
/// 4 unrealizable tableau, 5 property violation.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace redword
