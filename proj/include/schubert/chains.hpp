#pragma once

// The decrement chain ("Algorithm 2") on tuples, its length tau, and the
// twist duality with principal chains.

#include <span>
#include <string_view>
#include <vector>

#include "schubert/tuple.hpp"

namespace schubert {

// One decrement pass: entry j drops by one when j is the first position and
// a_1 > 1, or a_j > a_{j-1} + 1 (comparisons against the pre-step values).
// Accepts any strictly increasing tuple of positive integers; no upper bound
// is imposed.  Throws Error(bottom_tuple) on [1, ..., d].
std::vector<int> algorithm2_step(std::span<const int> a);
GammaTuple algorithm2_step(const GammaTuple& a);

struct DecrementChain {
  std::vector<GammaTuple> steps;  // input first, [1, ..., d] last
};

DecrementChain decrement_chain(const GammaTuple& start);
std::vector<std::vector<int>> decrement_chain(std::span<const int> start);

// Number of tuples in the decrement chain, both endpoints counted.
int tau(std::span<const int> a);
inline int tau(const GammaTuple& a) { return tau(a.entries()); }

// tau(a) == m(a) + d + 1.  Requires a != [1, ..., d].
bool verify_tau_formula(const GammaTuple& a);

// Decrement chain from twist(gamma) equals the twisted principal chain of
// gamma, element by element.  Requires gamma != top.
bool verify_twist_duality(const GammaTuple& gamma);

// Which branch of the inductive length argument a tuple falls into, with
// r the first 1-based position where a_r > r.
enum class TauCase {
  base,   // a = [1, ..., d-1, d+1]
  case1,  // a_r > r + 1
  case2,  // a_r = r + 1 and a_{r+1} = r + 2
  case3,  // a_r = r + 1 and a_{r+1} > r + 2
};

TauCase classify_tau_case(std::span<const int> a);
std::string_view to_string(TauCase c) noexcept;

// The maximum of m(a, j) is attained at the first entry of some block of
// entries with a_j > j, and every other such entry scores strictly lower;
// consecutive entries j < a_j = a_{j+1} - 1 satisfy m(a, j+1) = m(a, j) - 1.
bool check_m_value_decrement(std::span<const int> a);

}  // namespace schubert
