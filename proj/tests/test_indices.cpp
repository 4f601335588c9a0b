#include <random>

#include "doctest.h"

#include "hz/hypergraph.hpp"
#include "hz/indices.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_SUITE_BEGIN("indices");

TEST_CASE("edgeless hypergraphs score zero") {
  Hypergraph h = Hypergraph::build(3, {});
  CHECK(hm1(h) == 0);
  CHECK(hm2(h) == 0);
  CHECK(edge_contributions(h).empty());
}

TEST_CASE("single edge") {
  // Every member has degree 1: sum = |e|, product = 1.
  Hypergraph h = Hypergraph::build(4, {{0, 1, 2, 3}});
  CHECK(hm1(h) == 16);
  CHECK(hm2(h) == 1);
}

TEST_CASE("complete hypergraph on three vertices") {
  Hypergraph h =
      Hypergraph::build(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  // Every vertex lies in three of the four edges.
  CHECK(hm1(h) == 3 * 36 + 81);  // 189
  CHECK(hm2(h) == 3 * 81 + 729); // 972
  HmPair both = hm_both(h);
  CHECK(both.hm1 == 189);
  CHECK(both.hm2 == 972);
}

TEST_CASE("per-edge contributions") {
  Hypergraph h = Hypergraph::build(4, {{0, 1}, {1, 2, 3}});
  auto c = edge_contributions(h);
  REQUIRE(c.size() == 2);
  CHECK(c[0].edge.members == std::vector<int>{0, 1});
  CHECK(c[0].degree_sum == 3);
  CHECK(c[0].degree_product == 2);
  CHECK(c[1].edge.members == std::vector<int>{1, 2, 3});
  CHECK(c[1].degree_sum == 4);
  CHECK(c[1].degree_product == 2);
  CHECK(hm1(h) == 9 + 16);
  CHECK(hm2(h) == 4 + 4);
}

TEST_CASE("agrees with the naive oracle on random hypergraphs") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = test::random_hypergraph(rng, 1, 10, 8);
    auto [s1, s2] = test::naive_hm(h);
    CAPTURE(trial);
    CHECK(hm1(h) == s1);
    CHECK(hm2(h) == s2);
    HmPair both = hm_both(h);
    CHECK(both.hm1 == s1);
    CHECK(both.hm2 == s2);
  }
}

TEST_CASE("values exceed 64 bits without overflow") {
  // Twenty copies of near-full edges on 21 vertices give degree products
  // around 20^20, far beyond any machine word.
  std::vector<std::vector<int>> edges;
  for (int skip = 0; skip < 20; ++skip) {
    std::vector<int> e;
    for (int v = 0; v < 21; ++v) {
      if (v != skip) e.push_back(v);
    }
    edges.push_back(e);
  }
  Hypergraph h = Hypergraph::build(21, edges);
  auto [s1, s2] = test::naive_hm(h);
  CHECK(hm1(h) == s1);
  CHECK(hm2(h) == s2);
  CHECK(hm2(h) > IndexValue("18446744073709551615"));
}

TEST_CASE("decimal serialization") {
  CHECK(to_decimal(IndexValue(0)) == "0");
  CHECK(to_decimal(IndexValue(6249803)) == "6249803");
  const char* digits = "123456789012345678901234567890123456789";
  CHECK(to_decimal(IndexValue(digits)) == digits);
}

TEST_SUITE_END();
