#pragma once

// Exhaustive sweep driver: runs the selected checks on every gamma with
// 1 <= d <= n <= max_n, spread over a worker pool, and tallies the results
// in a deterministic order.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/settings.hpp"
#include "schubert/tuple.hpp"

namespace schubert {

enum class Check { tuple, tau, chains, structure, birkhoff, monomials, gorenstein };

std::string_view to_string(Check c) noexcept;
const std::vector<Check>& all_checks();

// "all" or a comma-separated list of check names.  Error(invalid_argument)
// on an unknown name or an empty list.
std::vector<Check> parse_checks(std::string_view text);

enum class Status { passed, failed, skipped, not_applicable };

struct CheckResult {
  Check check;
  Status status = Status::passed;
  bool sampled = false;  // passed on a randomized subset only
  std::string detail;
};

struct InstanceResult {
  GammaTuple gamma;
  std::vector<CheckResult> results;
  std::string tau_case;  // empty unless the tau check ran on a non-bottom tuple
};

// Runs `checks` on a single tuple.  Never throws for budget overruns; those
// come back as Status::skipped.
InstanceResult verify_instance(const GammaTuple& gamma, const std::vector<Check>& checks,
                               const Budgets& budgets = {});

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t not_applicable = 0;
  std::size_t sampled = 0;
  std::vector<std::string> failures;  // "gamma n=..: detail"
  std::vector<std::string> skips;
};

struct VerifyOptions {
  int max_n = 6;
  std::vector<Check> checks = all_checks();
  unsigned jobs = 1;
  Budgets budgets;
};

struct VerifySummary {
  int max_n = 0;
  std::size_t instances = 0;
  std::map<Check, CheckTally> tallies;
  std::map<std::string, std::size_t> tau_cases;

  bool all_passed() const noexcept;   // no failures and no skips
  bool any_failed() const noexcept;
  bool any_skipped() const noexcept;
  // 0 all passed, 1 some failure, 3 no failure but budget skips.
  int exit_code() const noexcept;
};

// Every tuple with 1 <= d <= n <= max_n, ordered by (n, d, entries).
std::vector<GammaTuple> sweep_instances(int max_n);

VerifySummary run_verify(const VerifyOptions& options);

std::string summary_to_json(const VerifySummary& summary);
std::string summary_to_text(const VerifySummary& summary);

}  // namespace schubert
