#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xytr {

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2, kExitCurveRejected = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// XYTR_THREADS, or the available parallelism; throws std::invalid_argument on a bad value.
int thread_count_from_env();

}  // namespace xytr
