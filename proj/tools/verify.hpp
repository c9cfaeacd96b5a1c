#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qillum::cli {

enum class Check { Identity, Limit, Monotonicity, DiscordOracle, Bounds, Horn, All };

std::optional<Check> parse_check(const std::string& name);
std::string to_string(Check c);

struct VerifyOptions {
  double eta = 0.5;
  double p0 = 0.5;
  std::optional<double> step;    // per-check default when unset
  int mesh = 80;
  std::optional<int> samples;    // per-check default when unset
  std::uint64_t seed = 42;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;  // measured deviations
};

/// Runs one check (or every check for Check::All) and returns the outcomes
/// in run order.
std::vector<CheckOutcome> run_checks(Check check, const VerifyOptions& options);

/// Prints the outcomes and returns 0 when all passed, 1 otherwise.
int report(const std::vector<CheckOutcome>& outcomes, std::ostream& out);

}  // namespace qillum::cli
