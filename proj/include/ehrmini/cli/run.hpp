#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ehrmini::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,         // bad flags, unknown subcommand
  kPrecondition = 2,       // unreadable or invalid input, guard exceeded
  kTheoremViolation = 3,   // an exact identity or self-check failed
};

/// Entry point of `minictl`. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs `body`, mapping precondition errors to kPrecondition and theorem
/// violations to kTheoremViolation with a one-line diagnostic on `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace ehrmini::cli
