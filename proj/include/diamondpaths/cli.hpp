#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diamondpaths {

/// Dispatches one CLI invocation. Exit status: 0 success, 1 verification
/// counterexample, 2 usage or parse error, 3 precondition error. All
/// diagnostics go to err prefixed with "error:".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace diamondpaths
