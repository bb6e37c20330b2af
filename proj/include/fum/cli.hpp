#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fum::cli {

/// Runs one subcommand (faces, classify, verify-vertex, verify-edge, chi,
/// chi-edge, color, color-edge, gen, scan, export-dot) and writes a JSON
/// document (or the requested format) to `out`.
///
/// Exit codes: 0 success; 1 verification failure, bound exceeded, or
/// counterexample candidate; 2 input error; 3 internal tripwire.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fum::cli
