#ifndef MSSRED_TOOLS_CLI_HPP
#define MSSRED_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mssred::cli {

enum Exit : int { ok = 0, no = 1, usage = 2, internal = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mssred::cli

#endif
