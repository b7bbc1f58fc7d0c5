#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace turnwalk::cli {

/// Fixed default seed so every command is reproducible without flags.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Parse and execute one command line (program name excluded).  Reports are
/// emitted on `out` (or the --out file), diagnostics on `err`.  Returns 0 on
/// success or a passing check, 1 when a check ran and failed, 2 on usage or
/// budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turnwalk::cli
