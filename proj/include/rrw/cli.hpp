#pragma once

// Command-line front end as a library: argument parsing lives in the tool,
// execution and report formatting live here so tests can call run().

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

namespace rrw {

enum class Command { verify, enumerate, table, refine_check, discover };
enum class Format { text, json, csv };

namespace exit_code {
inline constexpr int ok = 0;
/// A check failed, or the case rules did not classify some partition.
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int overflow = 3;
inline constexpr int error = 4;
}  // namespace exit_code

inline constexpr int kMinVerifyOrder = 30;
inline constexpr const char* kOrderEnv = "RRW_ORDER";

struct RunConfig {
  Command command = Command::verify;
  /// Catalog or statement id, or "all".
  std::string id = "all";
  std::optional<int> param;
  /// verify: truncation order (default from RRW_ORDER, else 60).
  std::optional<int> order;
  /// enumerate, table: the size N.
  int n = 0;
  /// refine-check: largest N.
  int n_max = 40;
  /// enumerate: diff2, diff2_star or congruence.
  std::string class_name = "diff2";
  int modulus = 5;
  std::set<int> residues;
  std::set<int> forbidden;
  std::set<int> extra;
  /// table: restrict to one signature class, e.g. "(2)".
  std::optional<std::string> signature;
  /// discover: problem file.
  std::string problem;
  Format format = Format::text;
  /// Write the report here instead of standard output.
  std::optional<std::string> output;
};

/// RRW_ORDER if set to an integer, otherwise 60. Throws std::invalid_argument
/// for a malformed value.
int default_order();

/// Executes the command; diagnostics go to err. Returns an exit_code value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

Format parse_format(const std::string& s);

}  // namespace rrw
