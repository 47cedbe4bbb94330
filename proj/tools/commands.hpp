#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tilinglab::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the tool with argv[1..] in `args`. Reports go to `out` unless --out
/// names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilinglab::cli
