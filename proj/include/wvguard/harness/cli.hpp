#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wvg
{

/// Runs one CLI invocation. `args` excludes the program name. Returns the exit code:
/// 0 ok, 2 parse/validation failure, 3 unguardable/infeasible, 4 internal check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wvg
