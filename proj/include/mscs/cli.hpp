#ifndef MSCS_CLI_HPP
#define MSCS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mscs {

// Command-line front end. Subcommands: stats, generate, sample, experiment.
// Returns 0 on success, 1 on usage errors, 2 on runtime errors.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out,
                 std::ostream& err);

// Same, for tests: `args` excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

} // namespace mscs

#endif
