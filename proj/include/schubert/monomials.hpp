#pragma once

// Standard monomials on Gamma(X; gamma) as multichains, and the factor
// counting that decides membership in intersections of powers of the
// ideals generated by the Omega_i.
//
// A standard monomial xi_1 ... xi_u is a multichain xi_1 <= ... <= xi_u.
// Since every Omega_i is an order ideal, "at least u_i factors in Omega_i"
// is the same as "the first u_i factors lie in Omega_i".  Coefficients and
// straightening relations never enter.

#include <cstddef>
#include <optional>
#include <vector>

#include "schubert/lattice.hpp"

namespace schubert {

class Multichain {
 public:
  Multichain() = default;
  // Throws Error(invalid_argument) unless the indices are weakly increasing
  // in the order of `lat`.
  Multichain(const SchubertLattice& lat, std::vector<SchubertLattice::Index> factors);
  static Multichain from_tuples(const SchubertLattice& lat, const std::vector<GammaTuple>& tuples);

  std::size_t length() const noexcept { return factors_.size(); }
  std::span<const SchubertLattice::Index> factors() const noexcept { return factors_; }
  std::vector<GammaTuple> tuples(const SchubertLattice& lat) const;

  friend auto operator<=>(const Multichain&, const Multichain&) = default;

 private:
  std::vector<SchubertLattice::Index> factors_;
};

// Exponents u_0 .. u_t, one per Omega_i.
struct PowerSpec {
  std::vector<int> exponents;

  int degree() const noexcept;  // max u_i, 0 when empty
};

// For every i, at least u_i factors lie in Omega_i.
// Throws Error(mismatched_shape) if spec does not have t + 1 entries.
bool membership(const Multichain& mc, const PowerSpec& spec, const SchubertLattice& lat);

struct MonomialOptions {
  std::size_t max_multichains = 10'000'000;
};

// All multichains of length max u_i whose first u_i factors lie in Omega_i.
// Depth-first over the lattice; Error(budget_exceeded) past the cap.
std::vector<Multichain> generators(const PowerSpec& spec, const SchubertLattice& lat,
                                   const MonomialOptions& options = {});

// Number of generators, by dynamic programming over positions (no
// materialization).  Saturates at SIZE_MAX.
std::size_t count_generators(const PowerSpec& spec, const SchubertLattice& lat);

// Some member multichain of exactly `length` factors, if one exists.
std::optional<Multichain> find_member(const PowerSpec& spec, const SchubertLattice& lat,
                                      std::size_t length, const MonomialOptions& options = {});

struct GenerationDegree {
  int degree = 0;            // max u_i
  int minimal_member = -1;   // smallest length with a member, from search
  bool verified() const noexcept { return degree == minimal_member; }
};

// Returns max u_i together with the smallest member length found by search
// over lengths 0, 1, ..., max u_i.
GenerationDegree min_generation_degree(const PowerSpec& spec, const SchubertLattice& lat,
                                       const MonomialOptions& options = {});

// (kappa_0, ..., kappa_t).  Error(degenerate_top_tuple) for the top tuple.
PowerSpec canonical_spec(const GammaTuple& gamma);

// (m(kappa - kappa_0), ..., m(kappa - kappa_t)), m >= 1.
PowerSpec anticanonical_shifted_spec(const GammaTuple& gamma, int m);

// (1, ..., 1) with t + 1 entries; its generators are exactly (gamma).
PowerSpec principal_spec(const SchubertLattice& lat);

}  // namespace schubert
