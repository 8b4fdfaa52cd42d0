#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypernorm::cli {

/// Runs one hypernorm command line (args excludes the program name).
/// Exit status: 0 success, 1 internal invariant violation, 2 bad input or
/// violated precondition. JSON goes to `out` only on success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypernorm::cli
