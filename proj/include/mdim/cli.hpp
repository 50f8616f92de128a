#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim::cli {

enum ExitCode : int {
    ok = 0,
    refuted = 1,  // verification false or theorem refuted
    usage = 2,
    budget = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdim::cli
