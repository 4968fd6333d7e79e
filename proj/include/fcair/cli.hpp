#pragma once

#include <ostream>

namespace fcair::cli {

/// Entry point of the `fcair` tool. Subcommands: index, query, verify,
/// export, serve. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fcair::cli
