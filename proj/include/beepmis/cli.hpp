#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beepmis::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNotTerminated = 2;
inline constexpr int kVerifyFailed = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. The master seed falls back to $BEEPMIS_SEED, then to 1.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a set file: one node index per line, blank lines ignored.
/// Throws ParseError with the offending line number.
std::vector<unsigned> parse_set_file_text(const std::string& text);

}  // namespace beepmis::cli
