#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lt::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_negative = 1, ///< countermodel, violation, mismatch
    exit_usage = 2,    ///< bad arguments or unparsable input
    exit_budget = 3,
};

/// Runs one `lt` invocation; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace lt::cli
