#pragma once

// Single-instance invariant report: closed-formula values, optionally
// cross-checked against the lattice, chain and Birkhoff oracles.

#include <optional>
#include <string>
#include <vector>

#include "schubert/settings.hpp"
#include "schubert/tuple.hpp"

namespace schubert {

inline constexpr int kReportSchemaVersion = 1;

struct OracleResults {
  std::vector<GammaTuple> principal_chain;  // from the enumerated lattice
  bool chain_matches_direct = false;        // equals the block-increment chain
  bool chain_length_matches = false;        // length == neg_a
  int tau_of_twist = 0;                     // Algorithm 2 length from twist(gamma)
  bool tau_matches = false;                 // == neg_a
  bool twist_duality = false;               // decrement chain == twisted principal chain
  int dist = 0;
  int rank = 0;
  bool dist_matches_fpt = false;
  bool rank_matches_neg_a = false;
  bool birkhoff_roundtrip = false;

  bool all_agree() const noexcept;
};

struct InvariantReport {
  GammaTuple gamma;
  BlockGapDecomposition decomposition;
  std::vector<int> kappas;  // empty for the top tuple
  int fpt = 0;
  int neg_a = 0;
  bool gorenstein = false;
  bool degenerate_top = false;
  int chain_length = 0;
  std::optional<OracleResults> oracles;
};

// Budget errors from the oracles propagate as Error(budget_exceeded).
InvariantReport build_report(const GammaTuple& gamma, bool run_oracles, const Budgets& budgets = {});

std::string report_to_json(const InvariantReport& report);
std::string report_to_table(const InvariantReport& report);

}  // namespace schubert
