#pragma once

// Deterministic JSON and Graphviz DOT renderings of a lattice and of its
// augmented join-irreducible poset.  Identical inputs give byte-identical
// output.

#include <string>

#include "schubert/birkhoff.hpp"
#include "schubert/lattice.hpp"

namespace schubert {

inline constexpr int kExportSchemaVersion = 1;

// Elements, cover edges (index pairs), upper neighbours, omega membership
// bitmaps ('1' = member, one character per element) and the principal chain.
std::string lattice_to_json(const SchubertLattice& lat);

// Cover digraph drawn bottom-to-top with the principal chain highlighted.
std::string lattice_to_dot(const SchubertLattice& lat);

// Nodes are -inf, the elements of P, +inf; edges are augmented covers.
std::string irreducibles_to_json(const SchubertLattice& lat, const IrreduciblePoset& poset);
std::string irreducibles_to_dot(const SchubertLattice& lat, const IrreduciblePoset& poset);

}  // namespace schubert
