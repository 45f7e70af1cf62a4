#pragma once

// Birkhoff representation of Gamma(X; gamma): the poset P of join-irreducible
// elements, the lattice J(P) of its order ideals, and the extreme saturated
// chain lengths through P with a new bottom and top adjoined.

#include <cstddef>
#include <vector>

#include "schubert/lattice.hpp"

namespace schubert {

class IrreduciblePoset {
 public:
  IrreduciblePoset() = default;
  IrreduciblePoset(std::vector<GammaTuple> elements, std::vector<std::vector<bool>> less);

  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const GammaTuple> elements() const noexcept { return elements_; }
  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  std::size_t comparable_pairs() const;

  // Cover relation of P itself.
  std::span<const std::size_t> upper_covers(std::size_t a) const { return covers_[a]; }
  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;

  // Augmented cover digraph: node 0 is -inf, nodes 1..|P| are P in order, node
  // |P|+1 is +inf.  Edge lists are sorted.
  std::size_t augmented_size() const noexcept { return elements_.size() + 2; }
  std::vector<std::vector<std::size_t>> augmented_covers() const;

 private:
  std::vector<GammaTuple> elements_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::vector<std::size_t>> covers_;
};

// Elements with exactly one lower cover, ordered as in the lattice.
// Throws Error(degenerate) for a one-element lattice.
IrreduciblePoset join_irreducibles(const SchubertLattice& lat);

struct IdealOptions {
  std::size_t max_ideals = 1'000'000;
};

// Order ideals of P as membership bitmaps, in the order produced by a
// depth-first include/exclude pass over P.
struct IdealLattice {
  std::vector<std::vector<bool>> ideals;

  std::size_t size() const noexcept { return ideals.size(); }
  static bool subset(const std::vector<bool>& lhs, const std::vector<bool>& rhs);
};

IdealLattice ideal_lattice(const IrreduciblePoset& poset, const IdealOptions& options = {});

// Checks that delta -> { p in P : p <= delta } is a bijection from the lattice
// onto J(P) that preserves and reflects the order.
bool verify_birkhoff_isomorphism(const SchubertLattice& lat, const IrreduciblePoset& poset,
                                 const IdealLattice& ideals);

// Shortest (dist) and longest (rank) saturated chain from -inf to +inf,
// counted in cover steps.  An empty P gives dist = rank = 1.
struct ChainStats {
  int dist = 0;
  int rank = 0;
};

ChainStats chain_stats(const IrreduciblePoset& poset);

// rank == kappa and dist == kappa'.  Requires gamma != top.
bool verify_remark(const GammaTuple& gamma, const LatticeOptions& options = {});

}  // namespace schubert
