#pragma once

// Tuples of the Plücker poset and the closed formulas evaluated on them.
//
// A GammaTuple [a_1,...,a_d] with 1 <= a_1 < ... < a_d <= n names a maximal
// minor of a generic d x n matrix.  Tuples are ordered componentwise; the
// set of all of them is a distributive lattice.  Indices in this API are
// 0-based unless a name says otherwise.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

class GammaTuple {
 public:
  // Throws Error(invalid_tuple) unless 1 <= entries strictly increase <= n.
  GammaTuple(int n, std::vector<int> entries);

  static GammaTuple bottom(int d, int n);  // [1, ..., d]
  static GammaTuple top(int d, int n);     // [n-d+1, ..., n]

  int d() const noexcept { return static_cast<int>(entries_.size()); }
  int n() const noexcept { return n_; }
  std::span<const int> entries() const noexcept { return entries_; }
  int operator[](std::size_t j) const noexcept { return entries_[j]; }

  bool is_top() const noexcept;
  bool is_bottom() const noexcept;

  std::string to_string() const;

  // Lexicographic on (n, entries); used for deterministic ordering only.
  // The mathematical order is leq() in lattice.hpp.
  friend auto operator<=>(const GammaTuple&, const GammaTuple&) = default;
  friend bool operator==(const GammaTuple&, const GammaTuple&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

// Parses "2,3,4" (whitespace tolerated) into entries; Error(invalid_tuple) on
// malformed input.
std::vector<int> parse_entries(std::string_view text);

// Closed integer interval [first, last]; empty when last == first - 1.
struct IntInterval {
  int first = 0;
  int last = -1;

  int size() const noexcept { return last - first + 1; }
  bool empty() const noexcept { return size() == 0; }
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

struct BlockGapDecomposition {
  int n = 0;
  std::vector<IntInterval> blocks;  // beta_0 .. beta_s
  std::vector<IntInterval> gaps;    // chi_0 .. chi_s, chi_s may be empty
  int s = 0;
  int t = 0;  // s, or s - 1 when a_d == n; -1 only for the top tuple
};

BlockGapDecomposition decompose(const GammaTuple& gamma);

// Inverse of decompose: concatenates the blocks.
GammaTuple reassemble(const BlockGapDecomposition& dec);

struct KappaProfile {
  std::vector<int> kappas;  // kappa_0 .. kappa_t
  int kappa_max = 0;
  int kappa_min = 0;
};

// kappa_i = |beta_0| + ... + |beta_i| + |chi_i| + ... + |chi_t|.
// Throws Error(degenerate_top_tuple) when t < 0.
KappaProfile kappa_profile(const BlockGapDecomposition& dec);

// F-pure threshold of the irrelevant maximal ideal: kappa', or 1 for the top
// tuple (the coordinate ring is then a polynomial ring in one variable).
int fpt(const GammaTuple& gamma);

// -a(G_gamma): kappa, or 1 for the top tuple.
int neg_a_invariant(const GammaTuple& gamma);

// b_i = n - a_{d-i+1} + 1.  An order-reversing involution.
GammaTuple twist(const GammaTuple& a);

// m(a, j) = a_j - 2j for the 1-based position j; requires a_j > j.
int m_value_at(std::span<const int> a, int j);

// m(a) = max { a_j - 2j : a_j > j }.  Accepts any strictly increasing tuple
// of positive integers.  Throws Error(bottom_tuple) for [1, ..., d].
int m_value(std::span<const int> a);
inline int m_value(const GammaTuple& a) { return m_value(a.entries()); }

// zeta_0 .. zeta_t: gamma with the last entry of block i raised by one.
// Empty for the top tuple.
std::vector<GammaTuple> upper_neighbors(const GammaTuple& gamma);

// |chi_{i-1}| == |beta_i| for 1 <= i <= t.
bool is_gorenstein(const BlockGapDecomposition& dec);

// kappa' * (p^e - 1).  p must be prime, e >= 1.  Throws Error(overflow)
// rather than wrapping, Error(degenerate_top_tuple) for the top tuple.
std::uint64_t nu_e_predicted(const GammaTuple& gamma, std::uint64_t p, unsigned e);

bool is_prime(std::uint64_t p) noexcept;

// Validates that entries are strictly increasing positive integers.
void require_increasing_positive(std::span<const int> entries);

}  // namespace schubert
