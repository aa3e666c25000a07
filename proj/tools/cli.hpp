#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicheb::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad or missing flags
  kParse = 3,         // malformed expression or coefficient document
  kNoConvergence = 4, // adaptive build hit max_n
  kValidation = 5,    // invalid domain, out-of-domain point, inconsistent document
  kIo = 6,            // unreadable input or unwritable output
  kEvaluation = 7,    // f produced NaN/Inf or hit a singularity
  kVerify = 8,        // --verify found residuals above threshold
};

/// Environment variable overriding the default tolerance (1e-15).
inline constexpr const char* kTolEnv = "BICHEB_TOL";

/// Runs the tool with `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicheb::cli
