#ifndef QHILB_CLI_HPP
#define QHILB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qhilb::cli
{

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

// Runs one invocation; args excludes the program name. Returns the process
// exit code: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qhilb::cli

#endif
