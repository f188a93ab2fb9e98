#ifndef COMPDI_CLI_HPP
#define COMPDI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace compdi::cli {

// Exit codes: 0 comparability / valid, 1 refuted, 2 input error, 3 inconclusive.
enum ExitCode : int { Ok = 0, Refuted = 1, InputError = 2, Inconclusive = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compdi::cli

#endif  // COMPDI_CLI_HPP
