#ifndef MCK_CLI_HPP
#define MCK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mck::cli {

/// Runs the mck command line. args excludes the program name. Returns the
/// process exit code: 0 all pass, 1 verification mismatch, 2 input or
/// usage error. Input errors win over mismatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mck::cli

#endif
