// Command-line front end.
#ifndef K3PIC_CLI_HPP
#define K3PIC_CLI_HPP

#include "k3pic/lattice.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace k3pic::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kOverflow = 3,
};

/// Parses "N,M" as nH + mF. Throws std::invalid_argument on malformed input
/// and OverflowError beyond the coefficient cap.
DivClass parse_class(const std::string& text);

/// args excludes the program name. When no --format is given, output is a
/// table if stdout_is_terminal and JSON otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool stdout_is_terminal = false);

}  // namespace k3pic::cli

#endif  // K3PIC_CLI_HPP
