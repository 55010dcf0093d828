#pragma once

#include <ostream>
#include <string>

namespace ribbonforge {

/// Inclusive integer range parsed from "A..B" or a single "A".
struct IntRange {
  int lo = 0;
  int hi = 0;
};
IntRange parse_range(const std::string& text);

/// The ribbonforge command line (verify, ribbon, sweep). Returns the exit code:
/// 0 when every check passes, 1 when a mathematical check fails, 2 on usage or
/// configuration errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ribbonforge
