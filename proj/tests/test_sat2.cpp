#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "indcut/errors.hpp"
#include "indcut/oracle.hpp"
#include "indcut/sat2.hpp"
#include "instances.hpp"

using namespace indcut;
using namespace indcut::testing;

namespace {

bool brute_sat(const TwoSatFormula& f) {
  const int r = f.var_count();
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<bool> a(static_cast<std::size_t>(r));
    for (int v = 0; v < r; ++v) a[static_cast<std::size_t>(v)] = (mask >> v) & 1UL;
    if (f.satisfied_by(a)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("2-SAT examples") {
  TwoSatFormula f(1);
  f.add_unit({0, true});
  f.add_unit({0, false});
  CHECK_FALSE(solve_2sat(f));

  TwoSatFormula h(2);
  h.add_clause({0, true}, {1, true});
  h.add_clause({0, false}, {1, true});
  auto a = solve_2sat(h);
  REQUIRE(a);
  CHECK((*a)[1]);

  TwoSatFormula free_vars(3);
  auto z = solve_2sat(free_vars);
  REQUIRE(z);
  CHECK(*z == std::vector<bool>{false, false, false});
  CHECK_THROWS_AS(free_vars.add_unit({3, true}), ContractViolation);
}

TEST_CASE("2-SAT agrees with exhaustive assignment search") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 15);
    TwoSatFormula f(r);
    const int m = static_cast<int>(rng() % (3 * r + 1));
    for (int i = 0; i < m; ++i)
      f.add_clause({static_cast<int>(rng() % r), rng() % 2 == 0}, {static_cast<int>(rng() % r), rng() % 2 == 0});
    auto a = solve_2sat(f);
    CHECK(a.has_value() == brute_sat(f));
    if (a) {
      CHECK(f.satisfied_by(*a));
      CHECK(solve_2sat(f) == a);
    }
  }
}

TEST_CASE("DIMACS CNF output") {
  TwoSatFormula f(2);
  f.add_unit({0, true});
  f.add_clause({0, false}, {1, false});
  CHECK(f.to_dimacs() == "p cnf 2 2\n1 0\n-1 -2 0\n");
}

TEST_CASE("separation formula examples") {
  // a=0 b=1 u=2 w=3
  Graph g = graph_of(4, {{0, 2}, {2, 3}, {3, 1}});
  auto ctx = make_separation_context(g, set_of(g, {0}), set_of(g, {1}));
  auto f = build_separation_formula(ctx);
  CHECK(f.var_count() == 1);
  CHECK(f.clauses().empty());
  CHECK(extract_cutset(ctx, {false}) == set_of(g, {2}));
  CHECK(extract_cutset(ctx, {true}) == set_of(g, {3}));

  // a=0 b=1 u=2 w=3 u2=4 w2=5
  Graph h = graph_of(6, {{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {4, 3}, {5, 3}, {5, 2}});
  auto ctx2 = make_separation_context(h, set_of(h, {0}), set_of(h, {1}));
  auto f2 = build_separation_formula(ctx2);
  CHECK(f2.var_count() == 1);
  CHECK(f2.clauses() == std::vector<Clause>{{{0, true}, {0, true}}, {{0, false}, {0, false}}});
  CHECK_FALSE(solve_2sat(f2));
  CHECK_FALSE(brute_separating(h, set_of(h, {0}), set_of(h, {1})));

  // a=0 b=1 u1=2 u2=3 w1=4 w2=5
  Graph k = graph_of(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}, {2, 3}});
  auto ctx3 = make_separation_context(k, set_of(k, {0}), set_of(k, {1}));
  auto f3 = build_separation_formula(ctx3);
  CHECK(f3.var_count() == 2);
  CHECK(f3.clauses() == std::vector<Clause>{{{0, true}, {1, true}}});
}

TEST_CASE("separation context preconditions") {
  Graph g = graph_of(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(make_separation_context(g, set_of(g, {0}), set_of(g, {2})), ContractViolation);
  CHECK_THROWS_AS(make_separation_context(g, set_of(g, {0}), set_of(g, {1})), ContractViolation);
  Graph p4 = graph_of(4, {{0, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(make_separation_context(p4, set_of(p4, {0}), p4.empty_set()), ContractViolation);
}

TEST_CASE("formula satisfiable iff an independent separator exists") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    auto raw = random_separation(rng, 10);
    auto ctx = make_separation_context(raw.g, raw.a, raw.b);
    auto assignment = solve_2sat(build_separation_formula(ctx));
    auto brute = brute_separating(raw.g, raw.a, raw.b, raw.na | raw.nb);
    REQUIRE(assignment.has_value() == brute.has_value());
    if (!assignment) continue;
    VertexSet s = extract_cutset(ctx, *assignment);
    CHECK(is_independent(raw.g, s));
    CHECK(separates(raw.g, s, raw.a, raw.b));
    for (const auto& c : ctx.components) {
      VertexSet part = s & (c.na | c.nb);
      CHECK((part == c.na || part == c.nb));
    }
  }
}
