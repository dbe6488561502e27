#ifndef KOSZULKIT_TOOLS_CLI_HPP
#define KOSZULKIT_TOOLS_CLI_HPP

#include "koszulkit/zoo.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace koszulkit::cli {

struct RunConfig {
    std::string subcommand;
    std::string spec_path;
    // inline spec; ignored when spec_path is set
    std::string family;
    std::string gamma;
    std::optional<int> d;
    std::optional<int> q;
    std::vector<int> interval;
    std::optional<int> depth;
    std::optional<int> x;
    std::string out;
    int verbosity = 0;
    // twist-check
    bool no_signs = false;
    // essential-check
    std::string against;
};

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Parses argv (argv[0] is the program name) and runs one subcommand. The
// JSON report goes to --out, or to `out` when no path is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace koszulkit::cli

#endif
