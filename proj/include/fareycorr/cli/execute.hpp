#pragma once

#include <ostream>

#include "fareycorr/cli/run_config.hpp"

namespace fareycorr::cli {

/// Process exit codes. Every failure also prints one JSON object
/// {"error": kind, "message": text, "exit_code": n} on the error stream.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitSizing = 4,
  kExitRange = 5,
  kExitConvergence = 6,
  kExitCheckFailed = 7,
};

/// Runs one command and writes its output to config.output_path (or `out`
/// when the path is empty). Progress and wall time go to `log`, never into the
/// output, so identical configs give byte-identical files. Returns kExitOk or
/// kExitCheckFailed; other failures are thrown.
int execute(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Full command-line entry point: parse, execute, map exceptions to exit codes.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fareycorr::cli
