#ifndef ARONBERNER_CLI_HPP
#define ARONBERNER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace aronberner {

/// Runs the command line `args` (without the program name).
/// Returns 0 when the run completed, 1 on an identity or limit failure and 2
/// on a usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aronberner

#endif  // ARONBERNER_CLI_HPP
