#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dg {

/// Runs the dgtool command line. `args` excludes the program name. Output
/// is buffered and written to `out` once; diagnostics go to `err`.
/// Exit codes: 0 success or related, 1 invalid or not related, 2 usage,
/// parse or precondition error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dg
