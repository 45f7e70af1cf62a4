#include "schubert/birkhoff.hpp"

#include <algorithm>
#include <limits>

namespace schubert {

IrreduciblePoset::IrreduciblePoset(std::vector<GammaTuple> elements,
                                   std::vector<std::vector<bool>> less)
    : elements_(std::move(elements)), less_(std::move(less)), covers_(elements_.size()) {
  const std::size_t k = elements_.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!less_[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < k && !between; ++c) between = less_[a][c] && less_[c][b];
      if (!between) covers_[a].push_back(b);
    }
}

std::size_t IrreduciblePoset::comparable_pairs() const {
  std::size_t count = 0;
  for (const auto& row : less_) count += static_cast<std::size_t>(std::ranges::count(row, true));
  return count;
}

std::vector<std::size_t> IrreduciblePoset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b) {
    bool has_lower = false;
    for (std::size_t a = 0; a < size() && !has_lower; ++a) has_lower = less_[a][b];
    if (!has_lower) out.push_back(b);
  }
  return out;
}

std::vector<std::size_t> IrreduciblePoset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (covers_[a].empty()) out.push_back(a);
  return out;
}

std::vector<std::vector<std::size_t>> IrreduciblePoset::augmented_covers() const {
  const std::size_t k = size();
  std::vector<std::vector<std::size_t>> adj(k + 2);
  if (k == 0) {
    adj[0].push_back(1);
    return adj;
  }
  for (auto m : minimal()) adj[0].push_back(m + 1);
  for (std::size_t a = 0; a < k; ++a) {
    for (auto b : covers_[a]) adj[a + 1].push_back(b + 1);
    if (covers_[a].empty()) adj[a + 1].push_back(k + 1);
  }
  return adj;
}

IrreduciblePoset join_irreducibles(const SchubertLattice& lat) {
  if (lat.size() < 2)
    throw Error(ErrorKind::degenerate, "one-element lattice has no join-irreducibles");
  std::vector<SchubertLattice::Index> picked;
  for (SchubertLattice::Index i = 0; i < lat.size(); ++i)
    if (lat.lower_covers(i).size() == 1) picked.push_back(i);
  std::vector<GammaTuple> elements;
  for (auto i : picked) elements.push_back(lat.at(i));
  std::vector<std::vector<bool>> less(picked.size(), std::vector<bool>(picked.size()));
  for (std::size_t a = 0; a < picked.size(); ++a)
    for (std::size_t b = 0; b < picked.size(); ++b)
      less[a][b] = a != b && lat.leq(picked[a], picked[b]);
  return IrreduciblePoset(std::move(elements), std::move(less));
}

bool IdealLattice::subset(const std::vector<bool>& lhs, const std::vector<bool>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] && !rhs[i]) return false;
  return true;
}

IdealLattice ideal_lattice(const IrreduciblePoset& poset, const IdealOptions& options) {
  // Elements of P arrive in lexicographic order, which extends the
  // componentwise order, so every element's predecessors are decided before
  // it and each branch of the recursion ends in a distinct ideal.
  const std::size_t k = poset.size();
  IdealLattice out;
  std::vector<bool> current(k);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      if (out.ideals.size() >= options.max_ideals)
        throw Error(ErrorKind::budget_exceeded,
                    "ideal lattice exceeds " + std::to_string(options.max_ideals) + " ideals");
      out.ideals.push_back(current);
      return;
    }
    self(self, pos + 1);
    bool allowed = true;
    for (std::size_t q = 0; q < pos && allowed; ++q) allowed = !poset.less(q, pos) || current[q];
    if (allowed) {
      current[pos] = true;
      self(self, pos + 1);
      current[pos] = false;
    }
  };
  rec(rec, 0);
  return out;
}

bool verify_birkhoff_isomorphism(const SchubertLattice& lat, const IrreduciblePoset& poset,
                                 const IdealLattice& ideals) {
  if (lat.size() != ideals.size()) return false;
  std::vector<std::vector<bool>> image;
  image.reserve(lat.size());
  for (const auto& delta : lat.elements()) {
    std::vector<bool> bits(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) bits[p] = leq(poset.elements()[p], delta);
    image.push_back(std::move(bits));
  }
  auto sorted_image = image;
  auto sorted_ideals = ideals.ideals;
  std::ranges::sort(sorted_image);
  std::ranges::sort(sorted_ideals);
  if (sorted_image != sorted_ideals) return false;
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b)
      if (lat.leq(a, b) != IdealLattice::subset(image[a], image[b])) return false;
  return true;
}

ChainStats chain_stats(const IrreduciblePoset& poset) {
  // Node indices already form a topological order of the augmented digraph.
  const auto adj = poset.augmented_covers();
  const std::size_t nodes = adj.size();
  constexpr int unreached = std::numeric_limits<int>::max();
  std::vector<int> shortest(nodes, unreached);
  std::vector<int> longest(nodes, -1);
  shortest[0] = 0;
  longest[0] = 0;
  for (std::size_t u = 0; u < nodes; ++u) {
    if (longest[u] < 0) continue;
    for (auto v : adj[u]) {
      shortest[v] = std::min(shortest[v], shortest[u] + 1);
      longest[v] = std::max(longest[v], longest[u] + 1);
    }
  }
  return {shortest[nodes - 1], longest[nodes - 1]};
}

bool verify_remark(const GammaTuple& gamma, const LatticeOptions& options) {
  if (gamma.is_top())
    throw Error(ErrorKind::degenerate_top_tuple, "kappa numbers are undefined for the top tuple");
  const auto lat = SchubertLattice::enumerate(gamma, options);
  const auto stats = chain_stats(join_irreducibles(lat));
  const auto profile = kappa_profile(decompose(gamma));
  return stats.rank == profile.kappa_max && stats.dist == profile.kappa_min;
}

}  // namespace schubert
