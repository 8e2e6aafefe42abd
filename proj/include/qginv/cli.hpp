#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qginv::cli {

/// Dispatches a full command line.  Returns 0 on success, 2 on input errors,
/// 3 on numerical failures.  Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// argv convenience wrapper used by main().
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qginv::cli
