#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brickforge::cli {

// Runs one command line (everything after argv[0]); results go to `out`,
// diagnostics to `err`.  Returns the process exit code: 0 on success, 1 on a
// domain or check failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brickforge::cli
