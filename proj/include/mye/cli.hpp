#pragma once

#include <iosfwd>

namespace mye::cli {

/// Entry point of the `mye` tool. Writes primary output to `out` unless a
/// subcommand was given --out, and diagnostics to `err`.
/// Returns 0 on success, 1 on runtime failure, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mye::cli
