#include "schubert/monomials.hpp"

#include <algorithm>
#include <limits>

namespace schubert {

Multichain::Multichain(const SchubertLattice& lat, std::vector<SchubertLattice::Index> factors)
    : factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k] >= lat.size())
      throw Error(ErrorKind::invalid_argument, "factor index outside the lattice");
    if (k > 0 && !lat.leq(factors_[k - 1], factors_[k]))
      throw Error(ErrorKind::invalid_argument,
                  "factors " + lat.at(factors_[k - 1]).to_string() + " and " +
                      lat.at(factors_[k]).to_string() + " do not increase");
  }
}

Multichain Multichain::from_tuples(const SchubertLattice& lat, const std::vector<GammaTuple>& tuples) {
  std::vector<SchubertLattice::Index> idx;
  for (const auto& t : tuples) {
    auto i = lat.index_of(t);
    if (!i) throw Error(ErrorKind::invalid_argument, t.to_string() + " is not in the lattice");
    idx.push_back(*i);
  }
  return Multichain(lat, std::move(idx));
}

std::vector<GammaTuple> Multichain::tuples(const SchubertLattice& lat) const {
  std::vector<GammaTuple> out;
  for (auto i : factors_) out.push_back(lat.at(i));
  return out;
}

int PowerSpec::degree() const noexcept {
  return exponents.empty() ? 0 : std::max(0, *std::ranges::max_element(exponents));
}

namespace {

void require_shape(const PowerSpec& spec, const SchubertLattice& lat) {
  if (static_cast<int>(spec.exponents.size()) != lat.t() + 1)
    throw Error(ErrorKind::mismatched_shape,
                "spec has " + std::to_string(spec.exponents.size()) + " exponents, lattice has t+1=" +
                    std::to_string(lat.t() + 1));
  for (int u : spec.exponents)
    if (u < 0) throw Error(ErrorKind::invalid_argument, "exponents must be non-negative");
}

// allowed[pos][idx]: the factor at position pos may be idx, i.e. idx lies in
// every Omega_i with u_i > pos.
std::vector<std::vector<bool>> position_masks(const PowerSpec& spec, const SchubertLattice& lat,
                                              std::size_t length) {
  std::vector<std::vector<bool>> allowed(length, std::vector<bool>(lat.size(), true));
  for (std::size_t pos = 0; pos < length; ++pos)
    for (std::size_t i = 0; i < spec.exponents.size(); ++i) {
      if (static_cast<std::size_t>(spec.exponents[i]) <= pos) continue;
      const auto& bits = lat.omega_bitmap(static_cast<int>(i));
      for (std::size_t k = 0; k < lat.size(); ++k) allowed[pos][k] = allowed[pos][k] && bits[k];
    }
  return allowed;
}

}  // namespace

bool membership(const Multichain& mc, const PowerSpec& spec, const SchubertLattice& lat) {
  require_shape(spec, lat);
  for (std::size_t i = 0; i < spec.exponents.size(); ++i) {
    const auto& bits = lat.omega_bitmap(static_cast<int>(i));
    const auto inside = std::ranges::count_if(mc.factors(), [&](auto k) { return bits[k]; });
    if (inside < spec.exponents[i]) return false;
  }
  return true;
}

std::vector<Multichain> generators(const PowerSpec& spec, const SchubertLattice& lat,
                                   const MonomialOptions& options) {
  require_shape(spec, lat);
  const auto length = static_cast<std::size_t>(spec.degree());
  const auto allowed = position_masks(spec, lat, length);
  std::vector<Multichain> out;
  std::vector<SchubertLattice::Index> cur;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == length) {
      if (out.size() >= options.max_multichains)
        throw Error(ErrorKind::budget_exceeded,
                    "more than " + std::to_string(options.max_multichains) + " multichains");
      out.emplace_back(lat, cur);
      return;
    }
    const SchubertLattice::Index from = cur.empty() ? 0 : cur.back();
    for (SchubertLattice::Index k = from; k < lat.size(); ++k) {
      if (!allowed[pos][k] || (!cur.empty() && !lat.leq(cur.back(), k))) continue;
      cur.push_back(k);
      self(self, pos + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t count_generators(const PowerSpec& spec, const SchubertLattice& lat) {
  require_shape(spec, lat);
  const auto length = static_cast<std::size_t>(spec.degree());
  if (length == 0) return 1;
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  auto add = [](std::size_t a, std::size_t b) { return a > cap - b ? cap : a + b; };
  const auto allowed = position_masks(spec, lat, length);
  const std::size_t n = lat.size();
  std::vector<std::size_t> ways(n);
  for (std::size_t k = 0; k < n; ++k) ways[k] = allowed[0][k] ? 1 : 0;
  for (std::size_t pos = 1; pos < length; ++pos) {
    std::vector<std::size_t> next(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (!allowed[pos][k]) continue;
      for (std::size_t j = 0; j <= k; ++j)
        if (ways[j] && lat.leq(j, k)) next[k] = add(next[k], ways[j]);
    }
    ways = std::move(next);
  }
  std::size_t total = 0;
  for (auto w : ways) total = add(total, w);
  return total;
}

std::optional<Multichain> find_member(const PowerSpec& spec, const SchubertLattice& lat,
                                      std::size_t length, const MonomialOptions& options) {
  require_shape(spec, lat);
  const std::size_t t1 = spec.exponents.size();
  std::vector<int> counts(t1, 0);
  std::vector<SchubertLattice::Index> cur;
  std::size_t visited = 0;
  // Branch-and-bound: abandon a prefix once some Omega_i can no longer reach
  // u_i factors even if every remaining factor lands inside it.
  auto feasible = [&](std::size_t remaining) {
    for (std::size_t i = 0; i < t1; ++i)
      if (counts[i] + static_cast<int>(remaining) < spec.exponents[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (++visited > options.max_multichains)
      throw Error(ErrorKind::budget_exceeded, "member search exceeded its node budget");
    if (!feasible(length - pos)) return false;
    if (pos == length) return true;
    const SchubertLattice::Index from = cur.empty() ? 0 : cur.back();
    for (SchubertLattice::Index k = from; k < lat.size(); ++k) {
      if (!cur.empty() && !lat.leq(cur.back(), k)) continue;
      for (std::size_t i = 0; i < t1; ++i) counts[i] += lat.in_omega(k, static_cast<int>(i));
      cur.push_back(k);
      if (self(self, pos + 1)) return true;
      cur.pop_back();
      for (std::size_t i = 0; i < t1; ++i) counts[i] -= lat.in_omega(k, static_cast<int>(i));
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  Multichain found(lat, cur);
  if (!membership(found, spec, lat))
    throw Error(ErrorKind::invalid_argument, "search returned a non-member");
  return found;
}

GenerationDegree min_generation_degree(const PowerSpec& spec, const SchubertLattice& lat,
                                       const MonomialOptions& options) {
  GenerationDegree out;
  out.degree = spec.degree();
  for (int len = 0; len <= out.degree; ++len) {
    if (find_member(spec, lat, static_cast<std::size_t>(len), options)) {
      out.minimal_member = len;
      break;
    }
  }
  return out;
}

PowerSpec canonical_spec(const GammaTuple& gamma) {
  return PowerSpec{kappa_profile(decompose(gamma)).kappas};
}

PowerSpec anticanonical_shifted_spec(const GammaTuple& gamma, int m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be positive");
  const auto profile = kappa_profile(decompose(gamma));
  PowerSpec spec;
  for (int k : profile.kappas) spec.exponents.push_back(m * (profile.kappa_max - k));
  return spec;
}

PowerSpec principal_spec(const SchubertLattice& lat) {
  return PowerSpec{std::vector<int>(static_cast<std::size_t>(lat.t() + 1), 1)};
}

}  // namespace schubert
