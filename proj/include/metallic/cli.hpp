#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metallic::cli {

// Runs one command-line invocation (arguments without the program name).
// Payload goes to `out`, diagnostics to `err`. Returns the process exit code:
//   0 success / identity holds
//   1 identity fails
//   2 usage error
//   3 domain or precondition error
//   4 convergence failure
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace metallic::cli
