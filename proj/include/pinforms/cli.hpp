#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinforms {

/// Runs one CLI invocation. args excludes the program name. Writes the
/// report to out and diagnostics to err; identical inputs produce
/// byte-identical output. Returns the process exit status: 0 success,
/// 1 malformed arguments, 2 domain violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pinforms
