#include "doctest.h"

#include "oracles.hpp"
#include "schubert/lattice.hpp"

using namespace schubert;

namespace {

GammaTuple G(int n, std::vector<int> e) { return GammaTuple(n, std::move(e)); }

std::vector<std::vector<int>> raw(std::span<const GammaTuple> v) {
  std::vector<std::vector<int>> out;
  for (auto& g : v) out.emplace_back(g.entries().begin(), g.entries().end());
  return out;
}

}  // namespace

TEST_CASE("enumerate small lattices") {
  auto two = SchubertLattice::enumerate(G(3, {2}));
  CHECK(raw(two.elements()) == std::vector<std::vector<int>>{{2}, {3}});
  CHECK(two.cover_edge_count() == 1);

  auto five = SchubertLattice::enumerate(G(4, {1, 3}));
  CHECK(raw(five.elements()) == oracle::lattice_above({1, 3}, 4));
  CHECK(five.size() == 5);
  CHECK(five.cover_edge_count() == 5);

  auto top = SchubertLattice::enumerate(GammaTuple::top(3, 6));
  CHECK(top.size() == 1);
  CHECK(top.t() == -1);
  CHECK(top.cover_edge_count() == 0);
}

TEST_CASE("enumeration budget") {
  LatticeOptions tight;
  tight.max_elements = 10;
  CHECK_NOTHROW(SchubertLattice::enumerate(G(5, {1, 2}), tight));  // C(5,2) = 10
  try {
    SchubertLattice::enumerate(G(6, {1, 2}), tight);  // 15 elements
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}

TEST_CASE("join, meet, order") {
  CHECK(join(G(4, {2, 3}), G(4, {1, 4})) == G(4, {2, 4}));
  CHECK(meet(G(4, {2, 3}), G(4, {1, 4})) == G(4, {1, 3}));
  CHECK(join(G(4, {2, 3}), G(4, {2, 3})) == G(4, {2, 3}));
  CHECK(join(G(11, {2, 3, 5, 7, 8, 10}), G(11, {2, 4, 6, 7, 9, 11})) == G(11, {2, 4, 6, 7, 9, 11}));
  CHECK(leq(G(4, {1, 3}), G(4, {2, 4})));
  CHECK_FALSE(leq(G(4, {2, 3}), G(4, {1, 4})));
  CHECK_THROWS_AS(leq(G(4, {1, 3}), G(5, {1, 3})), Error);
  CHECK_THROWS_AS(join(G(4, {1, 3}), G(4, {1, 2, 3})), Error);
}

TEST_CASE("covers") {
  auto lat = SchubertLattice::enumerate(G(4, {1, 3}));
  // Relational oracle on the 5-element lattice.
  REQUIRE(oracle::relational_covers(oracle::lattice_above({1, 3}, 4), {1, 3}) ==
          std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  auto c = lat.covers(G(4, {1, 3}));
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<GammaTuple>{G(4, {1, 4}), G(4, {2, 3})});
  CHECK(lat.covers(G(4, {3, 4})).empty());
  CHECK_THROWS_AS(lat.covers(G(4, {1, 2})), Error);

  auto big = SchubertLattice::enumerate(G(11, {2, 3, 4, 6, 8, 9}));
  auto gc = big.covers(big.gamma());
  auto zetas = upper_neighbors(big.gamma());
  std::sort(gc.begin(), gc.end());
  std::sort(zetas.begin(), zetas.end());
  CHECK(gc == zetas);
}

TEST_CASE("principal chain, worked example") {
  const std::vector<std::vector<int>> expected{
      {2, 3, 4, 6, 8, 9},   {2, 3, 5, 7, 8, 10}, {2, 4, 6, 7, 9, 11}, {3, 5, 6, 8, 10, 11},
      {4, 5, 7, 9, 10, 11}, {4, 6, 8, 9, 10, 11}, {5, 7, 8, 9, 10, 11}, {6, 7, 8, 9, 10, 11}};
  auto gamma = G(11, {2, 3, 4, 6, 8, 9});
  auto lat = SchubertLattice::enumerate(gamma);
  CHECK(raw(principal_chain(lat)) == expected);
  CHECK(raw(principal_chain_direct(gamma)) == expected);
}

TEST_CASE("principal chain, small cases") {
  auto lat = SchubertLattice::enumerate(G(4, {1, 3}));
  CHECK(raw(principal_chain(lat)) == std::vector<std::vector<int>>{{1, 3}, {2, 4}, {3, 4}});
  CHECK(principal_chain(SchubertLattice::enumerate(GammaTuple::top(2, 5))).size() == 1);
  CHECK(raw(principal_chain_direct(G(4, {2, 4}))) == std::vector<std::vector<int>>{{2, 4}, {3, 4}});
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d < n; ++d)
      CHECK(principal_chain_direct(GammaTuple::bottom(d, n)).size() == static_cast<std::size_t>(n));
}

TEST_CASE("omega sets") {
  auto lat = SchubertLattice::enumerate(G(4, {1, 3}));
  REQUIRE(lat.t() == 1);
  CHECK(lat.upper_neighbors()[0] == G(4, {2, 3}));
  CHECK(lat.upper_neighbors()[1] == G(4, {1, 4}));
  CHECK(lat.omega_set(0) == std::vector<GammaTuple>{G(4, {1, 3}), G(4, {1, 4})});
  CHECK(lat.omega_set(1) == std::vector<GammaTuple>{G(4, {1, 3}), G(4, {2, 3})});
  CHECK_THROWS_AS(lat.omega_set(2), Error);
  CHECK_THROWS_AS(lat.omega_set(-1), Error);
}

TEST_CASE("property: lattice agrees with relational oracles for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= n; ++d)
      for (auto& e : oracle::all_tuples(d, n)) {
        auto lat = SchubertLattice::enumerate(G(n, e));
        auto set = oracle::lattice_above(e, n);
        REQUIRE(raw(lat.elements()) == set);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          std::vector<std::vector<int>> got;
          for (auto j : lat.upper_covers(i)) got.emplace_back(lat.at(j).entries().begin(), lat.at(j).entries().end());
          std::sort(got.begin(), got.end());
          CHECK(got == oracle::relational_covers(set, set[i]));
        }
        CHECK(raw(principal_chain(lat)) == oracle::principal_chain(e, n));
      }
}

TEST_CASE("property: structural checks pass for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= n; ++d)
      for (auto& e : oracle::all_tuples(d, n)) {
        auto gamma = G(n, e);
        auto lat = SchubertLattice::enumerate(gamma);
        CHECK(check_upward_closed(lat).passed);
        CHECK(check_lattice_closed(lat).passed);
        auto dist = check_distributive(lat);
        CHECK(dist.passed);
        CHECK_FALSE(dist.sampled);
        CHECK(check_cover_rule(lat).passed);
        CHECK(check_omega_sets(lat).passed);
        CHECK(principal_chain(lat) == principal_chain_direct(gamma));
        CHECK(principal_chain(lat).size() == static_cast<std::size_t>(neg_a_invariant(gamma)));
      }
}

TEST_CASE("sampled and skipped structural checks") {
  auto lat = SchubertLattice::enumerate(G(10, {1, 2, 3, 4, 5}));  // 252 elements
  StructureLimits limits;
  limits.exhaustive_triples = 1000;
  limits.exhaustive_pairs = 1000;
  limits.random_samples = 5000;
  limits.relational_cover_limit = 100;
  auto d = check_distributive(lat, limits);
  CHECK(d.passed);
  CHECK(d.sampled);
  auto c = check_lattice_closed(lat, limits);
  CHECK(c.passed);
  CHECK(c.sampled);
  auto r = check_cover_rule(lat, limits);
  CHECK(r.skipped);
}
