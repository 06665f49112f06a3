#pragma once

namespace yldqpt::cli {

/// Parses argv and executes one subcommand. Exit codes: 0 success, 2 usage
/// or config error, 3 numerical failure (branch cut, overflow,
/// non-convergence, invalid domain), 4 verification failure.
int run(int argc, char** argv);

}  // namespace yldqpt::cli
