#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kPrecisionTooLow = 3,
};

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits at commas that are not nested inside parentheses.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace qseries::cli
