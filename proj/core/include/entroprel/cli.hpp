// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entroprel {

/// Runs the command-line interface.
///
/// Subcommands: solve, evaluate, charging-time, oracle, report.
/// Exit codes: 0 success with valid multipliers; 1 parse or validation
/// error; 2 optimizer stopped at max_iterations without meeting the
/// function tolerance; 3 multipliers violate the validity conditions.
///
/// `args` excludes the program name. Diagnostics go to `err`; their
/// verbosity follows the ENTROPREL_LOG environment variable
/// (quiet | info | trace, default info).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace entroprel
