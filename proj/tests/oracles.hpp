#pragma once

// Brute-force reference computations used to freeze expected values and to
// cross-check the library.  Everything here works on plain integer vectors
// and relational definitions (pairwise comparisons, exhaustive enumeration);
// nothing calls into the library's increment rules or closed formulas.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

inline bool le(const Tuple& a, const Tuple& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

inline bool lt(const Tuple& a, const Tuple& b) { return a != b && le(a, b); }

// All d-subsets of {1..n} via bitmasks, sorted lexicographically.
inline std::vector<Tuple> all_tuples(int d, int n) {
  std::vector<Tuple> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    Tuple t;
    for (int x = 1; x <= n; ++x)
      if (mask & (1u << (x - 1))) t.push_back(x);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Tuple> lattice_above(const Tuple& gamma, int n) {
  std::vector<Tuple> out;
  for (auto& t : all_tuples(static_cast<int>(gamma.size()), n))
    if (le(gamma, t)) out.push_back(t);
  return out;
}

// Upper covers of x inside `set`: y > x with no z in set strictly between.
inline std::vector<Tuple> relational_covers(const std::vector<Tuple>& set, const Tuple& x) {
  std::vector<Tuple> out;
  for (auto& y : set) {
    if (!lt(x, y)) continue;
    bool between = false;
    for (auto& z : set) between = between || (lt(x, z) && lt(z, y));
    if (!between) out.push_back(y);
  }
  return out;
}

inline std::vector<Tuple> relational_lower_covers(const std::vector<Tuple>& set, const Tuple& x) {
  std::vector<Tuple> out;
  for (auto& y : set) {
    if (!lt(y, x)) continue;
    bool between = false;
    for (auto& z : set) between = between || (lt(y, z) && lt(z, x));
    if (!between) out.push_back(y);
  }
  return out;
}

// Least upper bound found by scanning the set (not by componentwise max).
inline Tuple lub(const std::vector<Tuple>& set, const std::vector<Tuple>& items) {
  for (auto& cand : set) {
    bool upper = std::all_of(items.begin(), items.end(), [&](auto& it) { return le(it, cand); });
    if (!upper) continue;
    bool least = true;
    for (auto& other : set) {
      bool other_upper = std::all_of(items.begin(), items.end(), [&](auto& it) { return le(it, other); });
      if (other_upper && !le(cand, other)) least = false;
    }
    if (least) return cand;
  }
  return {};
}

// Principal chain from the definition: repeatedly take the least upper bound
// of the relational covers.
inline std::vector<Tuple> principal_chain(const Tuple& gamma, int n) {
  auto set = lattice_above(gamma, n);
  std::vector<Tuple> chain{gamma};
  while (true) {
    auto ups = relational_covers(set, chain.back());
    if (ups.empty()) break;
    chain.push_back(lub(set, ups));
  }
  return chain;
}

struct Stats {
  int dist = 0;
  int rank = 0;
  bool all_equal = true;  // every saturated -inf -> inf chain has one length
};

// Join-irreducibles by relational lower covers, then every saturated chain
// of the augmented poset enumerated explicitly.
inline std::vector<Tuple> join_irreducibles(const Tuple& gamma, int n) {
  auto set = lattice_above(gamma, n);
  std::vector<Tuple> out;
  for (auto& x : set)
    if (relational_lower_covers(set, x).size() == 1) out.push_back(x);
  return out;
}

inline Stats saturated_chain_stats(const Tuple& gamma, int n) {
  auto P = join_irreducibles(gamma, n);
  if (P.empty()) return {1, 1, true};
  std::vector<int> lengths;
  std::function<void(const Tuple&, int)> walk = [&](const Tuple& x, int len) {
    auto ups = relational_covers(P, x);
    if (ups.empty()) {
      lengths.push_back(len + 1);  // x -> +inf
      return;
    }
    for (auto& y : ups) walk(y, len + 1);
  };
  for (auto& x : P) {
    bool minimal = std::none_of(P.begin(), P.end(), [&](auto& y) { return lt(y, x); });
    if (minimal) walk(x, 1);  // -inf -> x
  }
  Stats s;
  s.dist = *std::min_element(lengths.begin(), lengths.end());
  s.rank = *std::max_element(lengths.begin(), lengths.end());
  s.all_equal = s.dist == s.rank;
  return s;
}

// Number of down-closed subsets of P by trying every subset.
inline std::size_t ideal_count(const std::vector<Tuple>& P) {
  std::size_t count = 0;
  const std::size_t k = P.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < k && closed; ++a) {
      if (!(mask & (1ul << a))) continue;
      for (std::size_t b = 0; b < k; ++b)
        if (lt(P[b], P[a]) && !(mask & (1ul << b))) closed = false;
    }
    count += closed;
  }
  return count;
}

// Every weakly increasing sequence of `length` elements of `set`.
inline std::vector<std::vector<Tuple>> multichains(const std::vector<Tuple>& set, std::size_t length) {
  std::vector<std::vector<Tuple>> out;
  std::vector<Tuple> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (auto& x : set) {
      if (!cur.empty() && !le(cur.back(), x)) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

// Algorithm-independent m(a) by scanning.
inline int m_value(const Tuple& a) {
  int best = std::numeric_limits<int>::min();
  for (std::size_t j = 0; j < a.size(); ++j) {
    int pos = static_cast<int>(j) + 1;
    if (a[j] > pos) best = std::max(best, a[j] - 2 * pos);
  }
  return best;
}

}  // namespace oracle
