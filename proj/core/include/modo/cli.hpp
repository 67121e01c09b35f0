#ifndef MODO_CLI_HPP
#define MODO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modo {

// Runs one command-line invocation (argv without the program name), writing
// all output to `out`.  Returns the process exit status: 0 on success, 1 on
// usage or parse errors, 2 on mathematical errors; every failure ends with a
// machine-readable error code as the last output line.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace modo

#endif  // MODO_CLI_HPP
