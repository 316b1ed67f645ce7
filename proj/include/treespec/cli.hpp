#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treespec {

// Runs one CLI invocation. args excludes the program name. Tree-consuming
// subcommands read from the given input stream when the input path is "-".
// Exit status: 0 success, 1 verify-theorem found violations, 2 usage or
// input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace treespec
