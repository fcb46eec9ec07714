#ifndef UDLAD_CLI_HPP
#define UDLAD_CLI_HPP

#include <string>
#include <vector>

namespace udlad {

// Entry point behind the `udlad` binary. Subcommands: synth, train, detect,
// bench. Exit codes: 0 success, 1 usage error, 2 data error, 3 degenerate
// training.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // without argv[0]

}  // namespace udlad

#endif
