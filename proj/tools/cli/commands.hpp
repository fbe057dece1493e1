#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bethevqe::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Entry point of the `bethevqe` tool. `args` excludes the program name.
/// Subcommands: spectrum, vqe, bethe {solve,verify}, sweep, circuit {emit,run}.
/// Relative output paths are resolved against $BETHEVQE_OUTPUT_DIR when set.
/// Failures print one line to `err` and leave no partial output files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bethevqe::cli
