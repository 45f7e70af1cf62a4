#include "schubert/lattice.hpp"

#include <algorithm>
#include <random>

namespace schubert {

namespace {

void require_same_shape(const GammaTuple& lhs, const GammaTuple& rhs) {
  if (lhs.d() != rhs.d() || lhs.n() != rhs.n())
    throw Error(ErrorKind::mismatched_shape, lhs.to_string() + " vs " + rhs.to_string());
}

template <typename Op>
GammaTuple componentwise(const GammaTuple& lhs, const GammaTuple& rhs, Op op) {
  require_same_shape(lhs, rhs);
  std::vector<int> out(static_cast<std::size_t>(lhs.d()));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = op(lhs[j], rhs[j]);
  return GammaTuple(lhs.n(), std::move(out));
}

}  // namespace

bool leq(const GammaTuple& lhs, const GammaTuple& rhs) {
  require_same_shape(lhs, rhs);
  for (std::size_t j = 0; j < static_cast<std::size_t>(lhs.d()); ++j)
    if (lhs[j] > rhs[j]) return false;
  return true;
}

GammaTuple join(const GammaTuple& lhs, const GammaTuple& rhs) {
  return componentwise(lhs, rhs, [](int x, int y) { return std::max(x, y); });
}

GammaTuple meet(const GammaTuple& lhs, const GammaTuple& rhs) {
  return componentwise(lhs, rhs, [](int x, int y) { return std::min(x, y); });
}

std::vector<GammaTuple> increment_covers(const GammaTuple& delta) {
  std::vector<GammaTuple> out;
  std::vector<int> e(delta.entries().begin(), delta.entries().end());
  for (std::size_t j = 0; j < e.size(); ++j) {
    const int limit = j + 1 < e.size() ? e[j + 1] - 1 : delta.n();
    if (e[j] < limit) {
      ++e[j];
      out.emplace_back(delta.n(), e);
      --e[j];
    }
  }
  return out;
}

SchubertLattice SchubertLattice::enumerate(const GammaTuple& gamma, const LatticeOptions& options) {
  SchubertLattice lat;
  const int d = gamma.d();
  const int n = gamma.n();

  // Lexicographic generation of strictly increasing tuples bounded below by
  // gamma componentwise.
  std::vector<int> cur(static_cast<std::size_t>(d));
  auto emit = [&](auto&& self, int j, int prev) -> void {
    if (j == d) {
      if (lat.elements_.size() >= options.max_elements)
        throw Error(ErrorKind::budget_exceeded,
                    "lattice above " + gamma.to_string() + " exceeds " +
                        std::to_string(options.max_elements) + " elements");
      lat.elements_.emplace_back(n, cur);
      return;
    }
    const int lo = std::max(gamma[static_cast<std::size_t>(j)], prev + 1);
    const int hi = n - (d - 1 - j);
    for (int v = lo; v <= hi; ++v) {
      cur[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v);
    }
  };
  emit(emit, 0, 0);

  lat.upper_.resize(lat.elements_.size());
  lat.lower_.resize(lat.elements_.size());
  for (Index i = 0; i < lat.elements_.size(); ++i) {
    for (const auto& c : increment_covers(lat.elements_[i])) {
      const auto j = lat.index_of(c);
      // Upward closure guarantees membership; a miss is an enumeration bug.
      if (!j) throw Error(ErrorKind::invalid_argument, "cover " + c.to_string() + " missing");
      lat.upper_[i].push_back(*j);
      lat.lower_[*j].push_back(i);
    }
  }
  for (auto& lc : lat.lower_) std::ranges::sort(lc);

  lat.zetas_ = schubert::upper_neighbors(gamma);
  lat.omega_.reserve(lat.zetas_.size());
  for (const auto& zeta : lat.zetas_) {
    std::vector<bool> bits(lat.elements_.size());
    for (Index i = 0; i < lat.elements_.size(); ++i) bits[i] = !schubert::leq(zeta, lat.elements_[i]);
    lat.omega_.push_back(std::move(bits));
  }
  return lat;
}

std::optional<SchubertLattice::Index> SchubertLattice::index_of(const GammaTuple& delta) const {
  auto it = std::ranges::lower_bound(elements_, delta);
  if (it == elements_.end() || *it != delta) return std::nullopt;
  return static_cast<Index>(it - elements_.begin());
}

bool SchubertLattice::leq(Index a, Index b) const {
  return schubert::leq(elements_[a], elements_[b]);
}

std::size_t SchubertLattice::cover_edge_count() const noexcept {
  std::size_t count = 0;
  for (const auto& u : upper_) count += u.size();
  return count;
}

std::vector<GammaTuple> SchubertLattice::covers(const GammaTuple& delta) const {
  const auto i = index_of(delta);
  if (!i) throw Error(ErrorKind::invalid_argument, delta.to_string() + " is not in the lattice");
  std::vector<GammaTuple> out;
  for (Index j : upper_[*i]) out.push_back(elements_[j]);
  return out;
}

const std::vector<bool>& SchubertLattice::omega_bitmap(int i) const {
  if (i < 0 || i > t())
    throw Error(ErrorKind::index_out_of_range,
                "omega index " + std::to_string(i) + " outside 0.." + std::to_string(t()));
  return omega_[static_cast<std::size_t>(i)];
}

std::vector<GammaTuple> SchubertLattice::omega_set(int i) const {
  const auto& bits = omega_bitmap(i);
  std::vector<GammaTuple> out;
  for (Index k = 0; k < elements_.size(); ++k)
    if (bits[k]) out.push_back(elements_[k]);
  return out;
}

std::vector<GammaTuple> principal_chain(const SchubertLattice& lat) {
  std::vector<GammaTuple> chain{lat.gamma()};
  SchubertLattice::Index cur = lat.bottom();
  while (cur != lat.top()) {
    auto ups = lat.upper_covers(cur);
    GammaTuple next = lat.at(ups.front());
    for (auto j : ups.subspan(1)) next = join(next, lat.at(j));
    const auto idx = lat.index_of(next);
    if (!idx) throw Error(ErrorKind::invalid_argument, "join left the lattice");
    chain.push_back(next);
    cur = *idx;
  }
  return chain;
}

std::vector<GammaTuple> principal_chain_direct(const GammaTuple& gamma) {
  std::vector<GammaTuple> chain{gamma};
  while (!chain.back().is_top()) {
    const auto& cur = chain.back();
    const auto dec = decompose(cur);
    std::vector<int> next(cur.entries().begin(), cur.entries().end());
    std::size_t end = 0;
    for (int i = 0; i <= dec.t; ++i) {
      end += static_cast<std::size_t>(dec.blocks[static_cast<std::size_t>(i)].size());
      ++next[end - 1];
    }
    chain.emplace_back(cur.n(), std::move(next));
  }
  return chain;
}

namespace {

CheckOutcome fail(std::string detail) {
  CheckOutcome out;
  out.passed = false;
  out.detail = std::move(detail);
  return out;
}

// Join/meet index tables; kMissing marks a result outside the lattice.
struct OperationTables {
  std::size_t size = 0;
  std::vector<std::size_t> join;
  std::vector<std::size_t> meet;
};

constexpr std::size_t kMissing = static_cast<std::size_t>(-1);

std::size_t lookup(const SchubertLattice& lat, const GammaTuple& x) {
  auto i = lat.index_of(x);
  return i ? *i : kMissing;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

CheckOutcome check_upward_closed(const SchubertLattice& lat) {
  for (const auto& e : lat.elements())
    for (const auto& c : increment_covers(e))
      if (!lat.contains(c)) return fail(c.to_string() + " covers " + e.to_string() + " but is missing");

  // Independent filter over all d-subsets of [n], when small enough.
  const auto& g = lat.gamma();
  if (binomial(g.n(), g.d()) > 2'000'000) return {};
  std::vector<GammaTuple> expected;
  std::vector<int> cur(static_cast<std::size_t>(g.d()));
  auto rec = [&](auto&& self, int j, int prev) -> void {
    if (j == g.d()) {
      GammaTuple x(g.n(), cur);
      if (leq(g, x)) expected.push_back(std::move(x));
      return;
    }
    for (int v = prev + 1; v <= g.n(); ++v) {
      cur[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, 0);
  if (!std::ranges::equal(expected, lat.elements()))
    return fail("element set differs from the filter of all " + std::to_string(g.d()) + "-subsets");
  return {};
}

CheckOutcome check_lattice_closed(const SchubertLattice& lat, const StructureLimits& limits) {
  const std::size_t n = lat.size();
  auto check_pair = [&](std::size_t a, std::size_t b) -> std::optional<CheckOutcome> {
    const auto& x = lat.at(a);
    const auto& y = lat.at(b);
    auto j = join(x, y);
    if (!lat.contains(j)) return fail("join of " + x.to_string() + ", " + y.to_string() + " missing");
    auto m = meet(x, y);
    if (!lat.contains(m)) return fail("meet of " + x.to_string() + ", " + y.to_string() + " missing");
    // The componentwise join must be the least upper bound in the order.
    if (!leq(x, j) || !leq(y, j) || !leq(m, x) || !leq(m, y))
      return fail("bounds violated for " + x.to_string() + ", " + y.to_string());
    return std::nullopt;
  };
  if (n * n <= limits.exhaustive_pairs) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        if (auto f = check_pair(a, b)) return *f;
    return {};
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < limits.random_samples; ++k)
    if (auto f = check_pair(pick(rng), pick(rng))) return *f;
  CheckOutcome out;
  out.sampled = true;
  return out;
}

CheckOutcome check_distributive(const SchubertLattice& lat, const StructureLimits& limits) {
  const std::size_t n = lat.size();
  const bool exhaustive = n * n * n <= limits.exhaustive_triples;

  OperationTables tables;
  if (exhaustive) {
    tables.size = n;
    tables.join.assign(n * n, kMissing);
    tables.meet.assign(n * n, kMissing);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        tables.join[a * n + b] = lookup(lat, join(lat.at(a), lat.at(b)));
        tables.meet[a * n + b] = lookup(lat, meet(lat.at(a), lat.at(b)));
        if (tables.join[a * n + b] == kMissing || tables.meet[a * n + b] == kMissing)
          return fail("lattice not closed at " + lat.at(a).to_string() + ", " + lat.at(b).to_string());
      }
    auto J = [&](std::size_t a, std::size_t b) { return tables.join[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) { return tables.meet[a * n + b]; };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (M(x, J(y, z)) != J(M(x, y), M(x, z)))
            return fail("x meet (y join z) differs at x=" + lat.at(x).to_string() +
                        " y=" + lat.at(y).to_string() + " z=" + lat.at(z).to_string());
    return {};
  }

  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < limits.random_samples; ++k) {
    const auto& x = lat.at(pick(rng));
    const auto& y = lat.at(pick(rng));
    const auto& z = lat.at(pick(rng));
    if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
      return fail("x meet (y join z) differs at x=" + x.to_string() + " y=" + y.to_string() +
                  " z=" + z.to_string());
  }
  CheckOutcome out;
  out.sampled = true;
  return out;
}

CheckOutcome check_cover_rule(const SchubertLattice& lat, const StructureLimits& limits) {
  const std::size_t n = lat.size();
  if (n > limits.relational_cover_limit) {
    CheckOutcome out;
    out.skipped = true;
    out.detail = "lattice has " + std::to_string(n) + " elements, above the relational limit";
    return out;
  }
  // Strict order matrix, then covers = pairs with nothing strictly between.
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) less[a][b] = a != b && lat.leq(a, b);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> relational;
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) between = less[a][c] && less[c][b];
      if (!between) relational.push_back(b);
    }
    std::vector<std::size_t> rule(lat.upper_covers(a).begin(), lat.upper_covers(a).end());
    std::ranges::sort(rule);
    if (rule != relational) return fail("covers of " + lat.at(a).to_string() + " disagree");
  }
  return {};
}

CheckOutcome check_omega_sets(const SchubertLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<bool> intersection(n, true);
  for (int i = 0; i <= lat.t(); ++i) {
    const auto& bits = lat.omega_bitmap(i);
    if (!bits[lat.bottom()]) return fail("gamma missing from Omega_" + std::to_string(i));
    // Downward closure is checked on lower covers, which generate the order.
    for (std::size_t k = 0; k < n; ++k) {
      if (!bits[k]) continue;
      for (auto below : lat.lower_covers(k))
        if (!bits[below])
          return fail("Omega_" + std::to_string(i) + " not an ideal at " + lat.at(k).to_string());
    }
    for (int j = 0; j < i; ++j)
      if (lat.omega_bitmap(j) == bits)
        return fail("Omega_" + std::to_string(j) + " equals Omega_" + std::to_string(i));
    for (std::size_t k = 0; k < n; ++k) intersection[k] = intersection[k] && bits[k];
  }
  if (lat.t() < 0) return {};  // top tuple: no omega sets, lattice is {gamma}
  for (std::size_t k = 0; k < n; ++k)
    if (intersection[k] != (k == lat.bottom()))
      return fail("intersection of Omega sets contains " + lat.at(k).to_string());
  return {};
}

}  // namespace schubert
