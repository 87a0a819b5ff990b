#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bkit::cli {

// Runs one subcommand. args excludes the program name.
// Exit status: 0 success / all checks passed, 1 a check failed,
// 2 usage error, 3 internal-consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bkit::cli
