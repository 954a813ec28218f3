#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellsw {

// Run one CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 on success, 1 when a check fails, 2 on schema or
// flag errors. Normal output goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ellsw
