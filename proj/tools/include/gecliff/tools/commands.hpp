#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gecliff::tools {

// Runs one CLI invocation (args excludes the program name). Results and
// domain errors go to `out` as JSON with exit code 0; usage and parse errors
// return 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gecliff::tools
