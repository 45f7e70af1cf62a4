#include "schubert/chains.hpp"

#include <algorithm>

#include "schubert/lattice.hpp"

namespace schubert {

namespace {

bool is_initial_segment(std::span<const int> a) {
  return a.back() == static_cast<int>(a.size());
}

}  // namespace

std::vector<int> algorithm2_step(std::span<const int> a) {
  require_increasing_positive(a);
  if (is_initial_segment(a))
    throw Error(ErrorKind::bottom_tuple, "no decrement step from [1,...,d]");
  std::vector<int> next(a.begin(), a.end());
  if (a[0] > 1) next[0] = a[0] - 1;
  for (std::size_t j = 1; j < a.size(); ++j)
    if (a[j] > a[j - 1] + 1) next[j] = a[j] - 1;
  return next;
}

GammaTuple algorithm2_step(const GammaTuple& a) {
  return GammaTuple(a.n(), algorithm2_step(a.entries()));
}

std::vector<std::vector<int>> decrement_chain(std::span<const int> start) {
  require_increasing_positive(start);
  std::vector<std::vector<int>> chain{{start.begin(), start.end()}};
  while (!is_initial_segment(chain.back())) chain.push_back(algorithm2_step(chain.back()));
  return chain;
}

DecrementChain decrement_chain(const GammaTuple& start) {
  DecrementChain chain;
  for (auto& e : decrement_chain(start.entries())) chain.steps.emplace_back(start.n(), std::move(e));
  return chain;
}

int tau(std::span<const int> a) {
  require_increasing_positive(a);
  int length = 1;
  std::vector<int> cur(a.begin(), a.end());
  while (!is_initial_segment(cur)) {
    cur = algorithm2_step(cur);
    ++length;
  }
  return length;
}

bool verify_tau_formula(const GammaTuple& a) {
  if (a.is_bottom()) throw Error(ErrorKind::bottom_tuple, "tau formula needs a != [1,...,d]");
  return tau(a) == m_value(a) + a.d() + 1;
}

bool verify_twist_duality(const GammaTuple& gamma) {
  if (gamma.is_top())
    throw Error(ErrorKind::degenerate_top_tuple, "twist duality needs gamma != [n-d+1,...,n]");
  const auto principal = principal_chain(SchubertLattice::enumerate(gamma));
  const auto decrement = decrement_chain(twist(gamma)).steps;
  if (principal.size() != decrement.size()) return false;
  for (std::size_t k = 0; k < principal.size(); ++k)
    if (twist(principal[k]) != decrement[k]) return false;
  return true;
}

TauCase classify_tau_case(std::span<const int> a) {
  require_increasing_positive(a);
  if (is_initial_segment(a)) throw Error(ErrorKind::bottom_tuple, "no case for [1,...,d]");
  const int d = static_cast<int>(a.size());
  int r = 1;
  while (a[static_cast<std::size_t>(r - 1)] == r) ++r;
  const int ar = a[static_cast<std::size_t>(r - 1)];
  if (ar > r + 1) return TauCase::case1;
  if (r == d) return TauCase::base;
  return a[static_cast<std::size_t>(r)] == r + 2 ? TauCase::case2 : TauCase::case3;
}

std::string_view to_string(TauCase c) noexcept {
  switch (c) {
    case TauCase::base: return "base";
    case TauCase::case1: return "case1";
    case TauCase::case2: return "case2";
    case TauCase::case3: return "case3";
  }
  return "unknown";
}

bool check_m_value_decrement(std::span<const int> a) {
  const int best = m_value(a);
  const std::size_t d = a.size();
  for (std::size_t j = 0; j + 1 < d; ++j) {
    const int pos = static_cast<int>(j) + 1;
    if (pos < a[j] && a[j] == a[j + 1] - 1 && m_value_at(a, pos + 1) != m_value_at(a, pos) - 1)
      return false;
  }
  bool attained_at_block_start = false;
  for (std::size_t j = 0; j < d; ++j) {
    const int pos = static_cast<int>(j) + 1;
    if (a[j] <= pos) continue;
    const bool block_start = j == 0 || a[j - 1] == pos - 1 || a[j] > a[j - 1] + 1;
    const int m = a[j] - 2 * pos;
    if (block_start) {
      attained_at_block_start = attained_at_block_start || m == best;
    } else if (m >= best) {
      return false;
    }
  }
  return attained_at_block_start;
}

}  // namespace schubert
