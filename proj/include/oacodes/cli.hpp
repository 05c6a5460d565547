#ifndef OACODES_CLI_HPP
#define OACODES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oacodes {

/// Full command-line surface. Returns the process exit status:
/// 0 success, 1 verification or reproduction mismatch, 2 malformed input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oacodes

#endif
