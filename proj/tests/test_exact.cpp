#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/exact.hpp"
#include "indcut/generators.hpp"
#include "indcut/oracle.hpp"

using namespace indcut;
using namespace indcut::testing;

TEST_CASE("exact decision examples") {
  auto star = decide_exact(star_graph(3));
  REQUIRE(star.yes());
  CHECK(*star.witness == VertexSet(4, {0}));
  CHECK_FALSE(decide_exact(complete_graph(4)).yes());
  CHECK_FALSE(decide_exact(wheel_graph(5)).yes());
  CHECK_THROWS_AS(decide_exact(triangle_union(2)), ContractViolation);
}

TEST_CASE("triangle-free fast path") {
  auto pet = decide_exact_fastpath_trianglefree(petersen_graph());
  REQUIRE(pet);
  CHECK(pet->witness->size() == 3);
  auto star = decide_exact_fastpath_trianglefree(star_graph(4));
  REQUIRE(star);
  CHECK(*star->witness == VertexSet(5, {0}));
  CHECK_FALSE(decide_exact_fastpath_trianglefree(path_graph(2)));
  CHECK_FALSE(decide_exact_fastpath_trianglefree(complete_graph(4)));
}

TEST_CASE("minimum independent cutset examples") {
  Graph p4 = path_graph(4);
  CHECK(minimum_independent_cutset(p4) == VertexSet(4, {1}));
  CHECK(minimum_independent_cutset(cycle_graph(6))->size() == 2);
  CHECK_FALSE(minimum_independent_cutset(complete_graph(4)));
}

TEST_CASE("2K2-free decision") {
  auto c4 = decide_2k2_free(cycle_graph(4));
  REQUIRE(c4.yes());
  CHECK(*c4.witness == VertexSet(4, {0, 2}));
  CHECK_THROWS_AS(decide_2k2_free(cycle_graph(6)), ContractViolation);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_split(10 + static_cast<int>(seed % 30), 0.3, seed);
    auto a = decide_2k2_free(g);
    CHECK(a.yes() == decide_exact(g).yes());
    CHECK(a.stats["mis_examined"] <= a.stats["mis_quadratic_bound"]);
  }
}

TEST_CASE("exact solvers agree with the oracle on the small corpus") {
  for (const auto& g : connected_graph_corpus(6)) {
    auto want = brute_decide(g);
    auto got = decide_exact(g);
    CHECK(got.yes() == want.yes());
    auto min = minimum_independent_cutset(g);
    auto brute = brute_minimum(g);
    REQUIRE(min.has_value() == brute.has_value());
    if (min) CHECK(min->size() == brute->size());
    if (auto fast = decide_exact_fastpath_trianglefree(g)) CHECK(want.yes());
  }
}

TEST_CASE("threaded minimisation matches the serial result") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gnp(14, 0.3, rng());
    CHECK(minimum_independent_cutset(g, 4) == minimum_independent_cutset(g, 1));
  }
}

TEST_CASE("supersets of independent cutsets are cutsets") {
  for (const auto& g : connected_graph_corpus(6)) {
    for_each_independent_subset(g, g.vertices(), [&](const VertexSet& s) {
      if (!is_cutset(g, s)) return true;
      for_each_maximal_independent_superset(g, s, [&](const VertexSet& m) {
        CHECK(is_cutset(g, m));
        return true;
      });
      return true;
    });
  }
}

TEST_CASE("sparse graphs have independent cutsets") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 20);
    int m = n - 1 + static_cast<int>(rng() % (n - 2));
    CHECK(decide_exact(tree_plus_edges(n, m, rng())).yes());
  }
}
