#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltkit {

// Runs the tiltkit command line (arguments without the program name). Writes
// JSON or DOT to out and diagnostics to err. Returns 0 on success, 1 on
// domain errors and 2 on malformed input; failures also print a JSON error
// object to out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tiltkit
