#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bei {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFalse = 1,
    kExitUsage = 2,
    kExitCapacity = 3,
    kExitInternal = 4,
};

// Runs the CLI on `args` (without the program name). Data goes to `out`,
// diagnostics to `err`; `in` backs the "-" input path.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace bei
