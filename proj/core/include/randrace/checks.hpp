#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randrace::checks {

// Cross-check matrix: closed form vs. enumeration vs. DP vs. Monte Carlo.
// Shared by the CLI `verify` subcommand and the acceptance test binary.

enum class Scope { all, formulas, bijections, invariance };

Scope parse_scope(std::string_view text);  // throws std::domain_error

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;  // did not fit the time budget; not a failure
  std::string observed;
  std::string expected;
  std::string note;
  double elapsed_s = 0.0;
};

struct CheckOptions {
  Scope scope = Scope::all;
  double budget_s = 600.0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

std::vector<CheckResult> run_checks(const CheckOptions& options);

// The acceptance gate: one entry per numbered criterion, unbudgeted.
std::vector<CheckResult> run_acceptance_criteria(std::uint64_t seed = 0,
                                                 unsigned workers = 0);

}  // namespace randrace::checks
