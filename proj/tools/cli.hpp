#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carpetlab::cli {

/// Parses and runs one subcommand. Returns the process exit status:
/// 0 success, 1 validation/usage error, 2 budget or depth error.
/// All diagnostics go to `err`; artifacts and reports go to `out` or to the
/// file named by --out.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace carpetlab::cli
