#pragma once

// The upward-closed sublattice Gamma(X; gamma) = { delta : delta >= gamma }.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/tuple.hpp"

namespace schubert {

// Componentwise order and lattice operations on tuples of equal length.
// Throw Error(mismatched_shape) if d or n differ.
bool leq(const GammaTuple& lhs, const GammaTuple& rhs);
GammaTuple join(const GammaTuple& lhs, const GammaTuple& rhs);
GammaTuple meet(const GammaTuple& lhs, const GammaTuple& rhs);

// Tuples obtained by raising a single entry by one while staying strictly
// increasing and bounded by n.  These are exactly the covers in Gamma(X).
std::vector<GammaTuple> increment_covers(const GammaTuple& delta);

struct LatticeOptions {
  std::size_t max_elements = 1'000'000;
};

class SchubertLattice {
 public:
  using Index = std::size_t;

  // Enumerates all delta >= gamma in lexicographic order together with the
  // cover relation and the omega membership bitmaps.  Throws
  // Error(budget_exceeded) past options.max_elements.
  static SchubertLattice enumerate(const GammaTuple& gamma, const LatticeOptions& options = {});

  const GammaTuple& gamma() const noexcept { return elements_.front(); }
  int t() const noexcept { return static_cast<int>(zetas_.size()) - 1; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const GammaTuple> elements() const noexcept { return elements_; }
  const GammaTuple& at(Index i) const { return elements_.at(i); }

  Index bottom() const noexcept { return 0; }
  Index top() const noexcept { return elements_.size() - 1; }

  std::optional<Index> index_of(const GammaTuple& delta) const;
  bool contains(const GammaTuple& delta) const { return index_of(delta).has_value(); }

  // Index-level order test.
  bool leq(Index a, Index b) const;

  std::span<const Index> upper_covers(Index i) const { return upper_[i]; }
  std::span<const Index> lower_covers(Index i) const { return lower_[i]; }
  std::size_t cover_edge_count() const noexcept;

  // All tau with delta covered by tau.  Empty at the top.
  std::vector<GammaTuple> covers(const GammaTuple& delta) const;

  // zeta_0 .. zeta_t.
  std::span<const GammaTuple> upper_neighbors() const noexcept { return zetas_; }

  // Omega_i = { delta : delta is not >= zeta_i }.  Error(index_out_of_range)
  // unless 0 <= i <= t.
  std::vector<GammaTuple> omega_set(int i) const;
  const std::vector<bool>& omega_bitmap(int i) const;
  bool in_omega(Index element, int i) const { return omega_bitmap(i)[element]; }

 private:
  std::vector<GammaTuple> elements_;
  std::vector<std::vector<Index>> upper_;
  std::vector<std::vector<Index>> lower_;
  std::vector<GammaTuple> zetas_;
  std::vector<std::vector<bool>> omega_;
};

// xi_1 = gamma, xi_{k+1} = join of all covers of xi_k, read off the
// materialized lattice.
std::vector<GammaTuple> principal_chain(const SchubertLattice& lat);

// Same chain without the lattice: at each step raise the last entry of every
// block that does not end at n.
std::vector<GammaTuple> principal_chain_direct(const GammaTuple& gamma);

// Structural self-checks.  Each returns a CheckOutcome rather than throwing so
// sweeps can tally failures; `sampled` marks a randomized (non-exhaustive) run
// and `skipped` a check that was not performed because of its size limit.
struct CheckOutcome {
  bool passed = true;
  bool sampled = false;
  bool skipped = false;
  std::string detail;
};

struct StructureLimits {
  std::size_t exhaustive_pairs = 16'000'000;   // lattice closure
  std::size_t exhaustive_triples = 10'000'000; // distributivity
  std::size_t random_samples = 200'000;
  std::size_t relational_cover_limit = 10'000; // elements
  std::uint64_t seed = 0x5eed;
};

// Every Gamma(X)-cover of every element is an element, and the element set
// equals an independent filter of all d-subsets of [n].
CheckOutcome check_upward_closed(const SchubertLattice& lat);
// Componentwise join and meet of every pair are elements.
CheckOutcome check_lattice_closed(const SchubertLattice& lat, const StructureLimits& limits = {});
CheckOutcome check_distributive(const SchubertLattice& lat, const StructureLimits& limits = {});
// Relational covers (no element strictly between) equal the increment rule.
CheckOutcome check_cover_rule(const SchubertLattice& lat, const StructureLimits& limits = {});
// Each Omega_i is an order ideal containing gamma, they are pairwise
// distinct, and their intersection is {gamma}.
CheckOutcome check_omega_sets(const SchubertLattice& lat);

}  // namespace schubert
