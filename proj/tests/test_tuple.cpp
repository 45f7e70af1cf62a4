#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "schubert/lattice.hpp"
#include "schubert/tuple.hpp"

using namespace schubert;

namespace {

GammaTuple G(int n, std::vector<int> e) { return GammaTuple(n, std::move(e)); }

std::vector<int> sizes(const std::vector<IntInterval>& v) {
  std::vector<int> out;
  for (auto& x : v) out.push_back(x.size());
  return out;
}

template <typename F>
void for_all_tuples(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= n; ++d)
      for (auto& e : oracle::all_tuples(d, n)) f(GammaTuple(n, e));
}

}  // namespace

TEST_CASE("GammaTuple validation") {
  CHECK_NOTHROW(G(4, {1, 3}));
  CHECK_THROWS_AS(G(4, {3, 3}), Error);
  CHECK_THROWS_AS(G(4, {0, 3}), Error);
  CHECK_THROWS_AS(G(4, {2, 5}), Error);
  CHECK_THROWS_AS(G(4, {}), Error);
  CHECK_THROWS_AS(G(2, {1, 2, 3}), Error);
  try {
    G(4, {3, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_tuple);
  }
  CHECK(GammaTuple::top(3, 7) == G(7, {5, 6, 7}));
  CHECK(GammaTuple::bottom(3, 7) == G(7, {1, 2, 3}));
  CHECK(G(7, {5, 6, 7}).is_top());
  CHECK(G(7, {1, 2, 3}).is_bottom());
  CHECK(G(3, {1, 2, 3}).is_top());
  CHECK(G(3, {1, 2, 3}).is_bottom());
}

TEST_CASE("parse_entries") {
  CHECK(parse_entries("2,3,4,6,8,9") == std::vector<int>{2, 3, 4, 6, 8, 9});
  CHECK(parse_entries("[1, 3]") == std::vector<int>{1, 3});
  CHECK_THROWS_AS(parse_entries("1,,3"), Error);
  CHECK_THROWS_AS(parse_entries("1;3"), Error);
  CHECK_THROWS_AS(parse_entries(""), Error);
}

TEST_CASE("decompose worked example") {
  auto dec = decompose(G(11, {2, 3, 4, 6, 8, 9}));
  CHECK(dec.blocks == std::vector<IntInterval>{{2, 4}, {6, 6}, {8, 9}});
  CHECK(dec.gaps == std::vector<IntInterval>{{5, 5}, {7, 7}, {10, 11}});
  CHECK(dec.s == 2);
  CHECK(dec.t == 2);
}

TEST_CASE("decompose single block and touching n") {
  auto one = decompose(G(9, {1, 2, 3, 4}));
  CHECK(one.blocks == std::vector<IntInterval>{{1, 4}});
  CHECK(one.gaps == std::vector<IntInterval>{{5, 9}});
  CHECK(one.s == 0);
  CHECK(one.t == 0);

  auto edge = decompose(G(4, {2, 4}));
  CHECK(sizes(edge.blocks) == std::vector<int>{1, 1});
  CHECK(sizes(edge.gaps) == std::vector<int>{1, 0});
  CHECK(edge.s == 1);
  CHECK(edge.t == 0);

  CHECK(decompose(GammaTuple::top(3, 5)).t == -1);
}

TEST_CASE("kappa profile") {
  // kappa_max = 8 is the principal-chain length from the relational oracle.
  REQUIRE(oracle::principal_chain({2, 3, 4, 6, 8, 9}, 11).size() == 8);
  auto k = kappa_profile(decompose(G(11, {2, 3, 4, 6, 8, 9})));
  CHECK(k.kappas == std::vector<int>{7, 7, 8});
  CHECK(k.kappa_max == 8);
  CHECK(k.kappa_min == 7);

  auto full = kappa_profile(decompose(GammaTuple::bottom(3, 7)));
  CHECK(full.kappas == std::vector<int>{7});

  REQUIRE(oracle::principal_chain({1, 3}, 4).size() == 3);
  auto small = kappa_profile(decompose(G(4, {1, 3})));
  CHECK(small.kappas == std::vector<int>{3, 3});

  try {
    kappa_profile(decompose(GammaTuple::top(2, 4)));
    FAIL("expected degenerate-top-tuple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_top_tuple);
  }
}

TEST_CASE("fpt and -a") {
  REQUIRE(oracle::saturated_chain_stats({2, 3, 4, 6, 8, 9}, 11).dist == 7);
  CHECK(fpt(G(11, {2, 3, 4, 6, 8, 9})) == 7);
  CHECK(neg_a_invariant(G(11, {2, 3, 4, 6, 8, 9})) == 8);
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) {
      CHECK(fpt(GammaTuple::top(d, n)) == 1);
      CHECK(neg_a_invariant(GammaTuple::top(d, n)) == 1);
    }
  CHECK(fpt(G(4, {1, 3})) == 3);
  CHECK(neg_a_invariant(GammaTuple::bottom(3, 8)) == 8);
  REQUIRE(oracle::principal_chain({1, 2, 3}, 8).size() == 8);
}

TEST_CASE("twist") {
  CHECK(twist(G(11, {2, 3, 4, 6, 8, 9})) == G(11, {3, 4, 6, 8, 9, 10}));
  CHECK(twist(GammaTuple::bottom(3, 7)) == GammaTuple::top(3, 7));
  CHECK(twist(G(3, {2})) == G(3, {2}));
}

TEST_CASE("m value") {
  CHECK(m_value(G(11, {3, 4, 6, 8, 9, 10})) == 1);
  CHECK(oracle::m_value({3, 4, 6, 8, 9, 10}) == 1);
  for (int d = 1; d <= 6; ++d) {
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = j + 1;
    e.back() = d + 1;
    CHECK(m_value(G(d + 1, e)) == 1 - d);
  }
  CHECK(m_value(G(3, {3})) == 1);
  CHECK_THROWS_AS(m_value(GammaTuple::bottom(3, 5)), Error);
  CHECK(m_value_at(std::vector<int>{3, 4}, 1) == 1);
  CHECK_THROWS_AS(m_value_at(std::vector<int>{1, 4}, 1), Error);
}

TEST_CASE("upper neighbors") {
  auto z = upper_neighbors(G(11, {2, 3, 4, 6, 8, 9}));
  CHECK(z == std::vector<GammaTuple>{G(11, {2, 3, 5, 6, 8, 9}), G(11, {2, 3, 4, 7, 8, 9}),
                                     G(11, {2, 3, 4, 6, 8, 10})});
  CHECK(upper_neighbors(GammaTuple::bottom(3, 6)) == std::vector<GammaTuple>{G(6, {1, 2, 4})});
  CHECK(upper_neighbors(G(4, {2, 4})) == std::vector<GammaTuple>{G(4, {3, 4})});
  CHECK(upper_neighbors(GammaTuple::top(2, 5)).empty());
}

TEST_CASE("upper neighbors equal relational covers") {
  for_all_tuples(7, [](const GammaTuple& g) {
    std::vector<int> e(g.entries().begin(), g.entries().end());
    auto set = oracle::lattice_above(e, g.n());
    auto expected = oracle::relational_covers(set, e);
    std::vector<std::vector<int>> got;
    for (auto& z : upper_neighbors(g)) got.emplace_back(z.entries().begin(), z.entries().end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  });
}

TEST_CASE("gorenstein") {
  CHECK_FALSE(is_gorenstein(decompose(G(11, {2, 3, 4, 6, 8, 9}))));
  CHECK(is_gorenstein(decompose(G(4, {1, 3}))));
  CHECK(is_gorenstein(decompose(G(4, {2, 4}))));
}

TEST_CASE("nu_e prediction") {
  CHECK(nu_e_predicted(G(11, {2, 3, 4, 6, 8, 9}), 2, 3) == 49);
  CHECK(nu_e_predicted(G(11, {2, 3, 4, 6, 8, 9}), 3, 1) == 14);
  CHECK(nu_e_predicted(G(4, {1, 3}), 5, 2) == 72);
  CHECK_THROWS_AS(nu_e_predicted(G(4, {1, 3}), 4, 2), Error);
  CHECK_THROWS_AS(nu_e_predicted(G(4, {1, 3}), 5, 0), Error);
  CHECK_THROWS_AS(nu_e_predicted(GammaTuple::top(2, 4), 5, 1), Error);
  // kappa' = 2 for [1] in n = 2; 2 * (2^63 - 1) still fits, 2^64 does not.
  CHECK(nu_e_predicted(G(2, {1}), 2, 63) == 2 * ((std::uint64_t{1} << 63) - 1));
  try {
    nu_e_predicted(G(2, {1}), 2, 64);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
  try {
    nu_e_predicted(G(11, {2, 3, 4, 6, 8, 9}), 2, 62);  // 7 * (2^62 - 1) overflows
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
}

TEST_CASE("property: decomposition invariants") {
  for_all_tuples(9, [](const GammaTuple& g) {
    auto dec = decompose(g);
    CHECK(reassemble(dec) == g);
    int blocks = 0, gaps = 0;
    for (auto& b : dec.blocks) blocks += b.size();
    for (auto& c : dec.gaps) gaps += c.size();
    CHECK(blocks == g.d());
    CHECK(blocks + gaps == g.n() - g[0] + 1);
    for (std::size_t i = 0; i + 1 < dec.blocks.size(); ++i) {
      CHECK(!dec.gaps[i].empty());  // maximality
      CHECK(dec.gaps[i].first == dec.blocks[i].last + 1);
      CHECK(dec.gaps[i].last + 1 == dec.blocks[i + 1].first);
    }
    if (g[static_cast<std::size_t>(g.d() - 1)] == g.n()) {
      CHECK(dec.gaps.back().empty());
      CHECK(dec.t == dec.s - 1);
    } else {
      CHECK(dec.t == dec.s);
    }
  });
}

TEST_CASE("property: kappa differences, extremes and gorenstein") {
  for_all_tuples(9, [](const GammaTuple& g) {
    if (g.is_top()) return;
    auto dec = decompose(g);
    auto k = kappa_profile(dec);
    REQUIRE(k.kappas.size() == static_cast<std::size_t>(dec.t + 1));
    for (int i = 1; i <= dec.t; ++i) {
      auto u = static_cast<std::size_t>(i);
      CHECK(k.kappas[u - 1] - k.kappas[u] == dec.gaps[u - 1].size() - dec.blocks[u].size());
    }
    CHECK(k.kappa_min <= k.kappa_max);
    CHECK(is_gorenstein(dec) == (k.kappa_min == k.kappa_max));
  });
}

TEST_CASE("property: twist is an order-reversing involution") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) {
      auto all = oracle::all_tuples(d, n);
      for (auto& e : all) CHECK(twist(twist(G(n, e))) == G(n, e));
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int k = 0; k < 200; ++k) {
        auto a = G(n, all[pick(rng)]);
        auto b = G(n, all[pick(rng)]);
        CHECK(leq(a, b) == leq(twist(b), twist(a)));
      }
    }
}
