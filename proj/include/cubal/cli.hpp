#pragma once

// Command-line front end: argument parsing and command dispatch. Kept in the
// library so the tests can drive it without spawning processes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubal/errors.hpp"

namespace cubal::cli {

enum class Command { Enum, Orbits, Mul, Plenary, Char, Phi, Zerodiv, Subalg, Verify, Classify };

std::string to_string(Command c);

enum class Side { Left, Right };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

struct RunConfig {
  Command command = Command::Enum;
  std::optional<int> m;
  /// Operation table (text or JSON), for commands taking --op.
  std::optional<std::string> op_path;
  /// Positional matrix files.
  std::vector<std::string> inputs;
  /// --census for enum, --output elsewhere.
  std::optional<std::string> output;
  int jobs = 1;
  int power = 1;
  Side side = Side::Left;
  /// Enumeration budget after CUBAL_MAX_M and --allow-m6.
  int max_m = 5;
  bool count_only = false;
  bool unchecked = false;
  bool list_invariant_sets = false;
  bool all = false;
  bool pretty = false;
  bool timing = false;
};

/// Bad command line, missing file, or a budget violation detected up front.
class UsageError : public Error {
public:
  using Error::Error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public Error {
public:
  using Error::Error;
};

/// `max_m_env` is the value of CUBAL_MAX_M, if set.
RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> max_m_env = std::nullopt);

/// Runs the command, writing the report to `out` and diagnostics to `err`.
/// Returns kOk, kVerificationFailed or kUsageError.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses and runs; used by main().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubal::cli
