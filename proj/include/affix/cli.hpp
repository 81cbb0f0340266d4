#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affix {

/// Process exit codes of the command-line tool.
enum class ExitStatus : int {
    yes = 0,          ///< universal / synchronizing / mortal, or a successful gen/gadget
    no = 1,           ///< not universal / not synchronizing / not mortal
    input_error = 2,  ///< malformed files or flags
    resource = 3,     ///< search budget exhausted
};

/// Runs one subcommand. `args` excludes the program name. Verdicts go to
/// `out`, one-line diagnostics to `err`.
ExitStatus run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace affix
