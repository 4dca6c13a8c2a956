#include <map>
#include <random>
#include <tuple>

#include "doctest.h"
#include "helpers.hpp"
#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/generators.hpp"

using namespace indcut;
using namespace indcut::testing;

namespace {

std::vector<VertexSet> brute_maximal(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_subset(g, [&](const VertexSet& s) {
    if (!is_independent(g, s)) return;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!s.contains(v) && !g.neighbors(v).intersects(s)) return;
    out.push_back(s);
  });
  return out;
}

using Triple = std::tuple<std::vector<Vertex>, std::vector<Vertex>, std::vector<Vertex>>;

std::set<Triple> collect3(const Graph& g, const VertexSet& x, const PartitionFilter& f) {
  std::set<Triple> out;
  for_each_partition3(g, x, f, [&](const Partition3& p) {
    out.insert({p.a.to_vector(), p.b.to_vector(), p.xp.to_vector()});
    return true;
  });
  return out;
}

std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> collect2(const Graph& g, const VertexSet& x) {
  std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  for_each_partition2(g, x, [&](const Partition2& p) {
    out.insert({p.a.to_vector(), p.xp.to_vector()});
    return true;
  });
  return out;
}

// Unordered {A, B} splits, for comparisons that ignore orientation.
std::set<Triple> unoriented(const std::set<Triple>& in) {
  std::set<Triple> out;
  for (auto [a, b, xp] : in) out.insert(a < b ? Triple{a, b, xp} : Triple{b, a, xp});
  return out;
}

}  // namespace

TEST_CASE("maximal independent sets on small graphs") {
  CHECK(count_maximal_independent_sets(complete_graph(4)) == 4);
  auto c5 = maximal_independent_sets(cycle_graph(5));
  CHECK(c5.size() == 5);
  for (const auto& s : c5) CHECK(s.size() == 2);
  CHECK(count_maximal_independent_sets(triangle_union(10)) == 59049);
}

TEST_CASE("maximal independent sets match brute force and the Moon-Moser bound") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    auto got = maximal_independent_sets(g);
    CHECK(got.size() == as_lists(got).size());
    CHECK(as_lists(got) == as_lists(brute_maximal(g)));
    CHECK(static_cast<long long>(got.size()) <= moon_moser_bound(n));
  }
}

TEST_CASE("Moon-Moser bound values") {
  CHECK(moon_moser_bound(3) == 3);
  CHECK(moon_moser_bound(4) == 4);
  CHECK(moon_moser_bound(5) == 6);
  CHECK(moon_moser_bound(30) == 59049);
}

TEST_CASE("maximal independent supersets") {
  Graph c4 = cycle_graph(4);
  std::vector<VertexSet> got;
  for_each_maximal_independent_superset(c4, set_of(c4, {0}), [&](const VertexSet& s) {
    got.push_back(s);
    return true;
  });
  CHECK(as_lists(got) == std::set<std::vector<Vertex>>{{0, 2}});

  Graph p4 = path_graph(4);
  got.clear();
  for_each_maximal_independent_superset(p4, set_of(p4, {0}), [&](const VertexSet& s) {
    got.push_back(s);
    return true;
  });
  CHECK(as_lists(got) == std::set<std::vector<Vertex>>{{0, 2}, {0, 3}});

  Graph g = gnp(9, 0.3, 2);
  got.clear();
  for_each_maximal_independent_superset(g, g.empty_set(), [&](const VertexSet& s) {
    got.push_back(s);
    return true;
  });
  CHECK(got == maximal_independent_sets(g));
  CHECK_THROWS_AS(for_each_maximal_independent_superset(c4, set_of(c4, {0, 1}), [](const VertexSet&) { return true; }),
                  ContractViolation);
}

TEST_CASE("minimal vertex covers") {
  auto covers = [](const Graph& g, int k) {
    std::vector<VertexSet> out;
    for_each_minimal_vertex_cover(g, k, [&](const VertexSet& s) {
      out.push_back(s);
      return true;
    });
    return out;
  };
  CHECK(as_lists(covers(path_graph(3), 1)) == std::set<std::vector<Vertex>>{{1}});
  CHECK(covers(complete_graph(4), 2).empty());
  CHECK(as_lists(covers(cycle_graph(6), 3)) == std::set<std::vector<Vertex>>{{0, 2, 4}, {1, 3, 5}});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = gnp(8, 0.35, rng());
    int k = static_cast<int>(rng() % 8);
    auto got = covers(g, k);
    CHECK(got.size() == as_lists(got).size());
    std::vector<VertexSet> want;
    for_each_subset(g, [&](const VertexSet& c) {
      if (c.size() > k || !is_independent(g, g.vertices() - c)) return;
      for (Vertex v : c)
        if (is_independent(g, g.vertices() - c.without(v))) return;
      want.push_back(c);
    });
    CHECK(as_lists(got) == as_lists(want));
  }
}

TEST_CASE("partitions2 examples") {
  Graph g = graph_of(2, {{0, 1}});
  auto got = collect2(g, g.vertices());
  CHECK(got.size() == 3);
  CHECK(got.count({{0, 1}, {}}) == 1);
  Graph k3 = complete_graph(3);
  // Three with |X'| = 1 plus X' = ∅.
  CHECK(collect2(k3, k3.vertices()).size() == 4);
  CHECK(collect2(k3, k3.empty_set()).empty());
}

TEST_CASE("partitions3 examples") {
  Graph two(2);
  auto got = collect3(two, two.vertices(), PartitionFilter::none(2));
  CHECK(got == std::set<Triple>{{{0}, {1}, {}}});
  Graph k3 = complete_graph(3);
  CHECK(collect3(k3, k3.vertices(), PartitionFilter::none(3)).empty());
  Graph uvw = graph_of(3, {{0, 1}});
  got = collect3(uvw, uvw.vertices(), PartitionFilter::none(3));
  CHECK(got == std::set<Triple>{{{0, 1}, {2}, {}}, {{0}, {2}, {1}}, {{1}, {2}, {0}}});
}

TEST_CASE("partition families are exactly the valid ones") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gnp(8, 0.35, rng());
    VertexSet x = g.empty_set();
    for (Vertex v = 0; v < 8; ++v)
      if (rng() % 3 != 0) x.insert(v);
    std::set<Triple> want3;
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> want2;
    // Every assignment of X to {A, B, X'}.
    std::vector<Vertex> xs = x.to_vector();
    std::size_t total = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      VertexSet a = g.empty_set(), b = g.empty_set(), xp = g.empty_set();
      std::size_t c = code;
      for (Vertex v : xs) {
        (c % 3 == 0 ? a : c % 3 == 1 ? b : xp).insert(v);
        c /= 3;
      }
      if (!is_independent(g, xp) || a.empty()) continue;
      if (b.empty()) want2.insert({a.to_vector(), xp.to_vector()});
      if (!b.empty() && !g.neighbors(a).intersects(b) && a.first() < b.first())
        want3.insert({a.to_vector(), b.to_vector(), xp.to_vector()});
    }
    auto got3 = collect3(g, x, PartitionFilter::none(8));
    CHECK(got3 == want3);
    CHECK(collect2(g, x) == want2);
    for (const auto& [a, b, xp] : got3) {
      Graph sub = g;
      VertexSet xs_set(8, std::span<const Vertex>(xp));
      VertexSet as(8, std::span<const Vertex>(a)), bs(8, std::span<const Vertex>(b));
      CHECK(separates(induced_subgraph(g, x).graph, induced_subgraph(g, x).project(xs_set),
                      induced_subgraph(g, x).project(as), induced_subgraph(g, x).project(bs)));
    }
  }
}

TEST_CASE("partition filters") {
  Graph g = path_graph(4);
  VertexSet x = g.vertices();
  PartitionFilter f = PartitionFilter::none(4);
  f.a.insert(3);
  f.b.insert(0);
  auto pinned = collect3(g, x, f);
  REQUIRE_FALSE(pinned.empty());
  for (const auto& [a, b, xp] : pinned) {
    CHECK(std::count(a.begin(), a.end(), 3) == 1);
    CHECK(std::count(b.begin(), b.end(), 0) == 1);
  }
  // Flipping the pins flips the orientation of every emitted split.
  PartitionFilter flipped = PartitionFilter::none(4);
  flipped.a.insert(0);
  flipped.b.insert(3);
  auto other = collect3(g, x, flipped);
  CHECK(unoriented(other) == unoriented(pinned));

  PartitionFilter bad = PartitionFilter::none(4);
  bad.a.insert(0);
  bad.b.insert(1);
  CHECK(collect3(g, x, bad).empty());
}

TEST_CASE("bounded-alpha partitions") {
  Graph k5 = complete_graph(5);
  long long p2 = 0, p3 = 0;
  for_each_bounded_alpha_partition(k5, k5.vertices(), 1, PartitionFilter::none(5),
                                   {[&](const Partition2&) { return ++p2, true; },
                                    [&](const Partition3&) { return ++p3, true; }});
  CHECK(p2 == 6);
  CHECK(p3 == 0);

  Graph p3g = path_graph(3);
  std::set<Triple> got;
  for_each_bounded_alpha_partition(p3g, p3g.vertices(), 2, PartitionFilter::none(3),
                                   {nullptr, [&](const Partition3& p) {
                                      got.insert({p.a.to_vector(), p.b.to_vector(), p.xp.to_vector()});
                                      return true;
                                    }});
  CHECK(got == std::set<Triple>{{{0}, {2}, {1}}});

  Graph c5 = cycle_graph(5);
  CHECK_THROWS_AS(for_each_bounded_alpha_partition(c5, c5.vertices(), 1, PartitionFilter::none(5),
                                                   {[](const Partition2&) { return true; }, nullptr}),
                  ContractViolation);
}

TEST_CASE("bounded-alpha partitions agree with the full families") {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    Graph g = gnp(10, 0.55, rng());
    VertexSet x = g.empty_set();
    for (Vertex v = 0; v < 10; ++v)
      if (rng() % 5 != 0 && x.size() < 8) x.insert(v);
    const int alpha = independence_number(g, x);
    if (alpha > 3) continue;
    ++checked;
    for (int c = alpha; c <= alpha + 1; ++c) {
      PartitionFilter f = PartitionFilter::none(10);
      if (trial % 3 == 1) f.a.insert(x.first());
      std::set<Triple> got3;
      std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> got2;
      for_each_bounded_alpha_partition(g, x, c, f,
                                       {[&](const Partition2& p) {
                                          got2.insert({p.a.to_vector(), p.xp.to_vector()});
                                          return true;
                                        },
                                        [&](const Partition3& p) {
                                          got3.insert({p.a.to_vector(), p.b.to_vector(), p.xp.to_vector()});
                                          return true;
                                        }});
      CHECK(got3 == collect3(g, x, f));
      std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> want2;
      for_each_partition2(g, x, f, [&](const Partition2& p) {
        want2.insert({p.a.to_vector(), p.xp.to_vector()});
        return true;
      });
      CHECK(got2 == want2);
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("triangles and induced paths") {
  CHECK_FALSE(find_triangle(cycle_graph(5)));
  CHECK_FALSE(find_induced_p5(cycle_graph(5)));
  auto p = find_induced_p5(path_graph(5));
  REQUIRE(p);
  CHECK(std::set<Vertex>(p->begin(), p->end()).size() == 5);
  CHECK(find_triangle(complete_graph(4)));
  CHECK_FALSE(vertex_in_no_triangle(complete_graph(4)));
  CHECK(vertex_in_no_triangle(petersen_graph()) == 0);
  CHECK(find_induced_p5(cycle_graph(6)));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gnp(9, 0.3, rng());
    if (auto q = find_induced_p5(g)) {
      VertexSet s(9, std::span<const Vertex>(q->data(), 5));
      CHECK(s.size() == 5);
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(g.adjacent((*q)[i], (*q)[j]) == (j == i + 1));
    }
  }
}

TEST_CASE("induced matchings and independence number") {
  CHECK(find_induced_matching(cycle_graph(6), 2));
  CHECK_FALSE(find_induced_matching(cycle_graph(4), 2));
  CHECK(independence_number(cycle_graph(7), VertexSet::full(7)) == 3);
  CHECK(independence_number(petersen_graph(), VertexSet::full(10)) == 4);
  CHECK(independent_subset_of_size(petersen_graph(), VertexSet::full(10), 4));
  CHECK_FALSE(independent_subset_of_size(petersen_graph(), VertexSet::full(10), 5));
  long long count = 0;
  for_each_independent_subset(path_graph(4), VertexSet::full(4), [&](const VertexSet&) { return ++count, true; });
  CHECK(count == 8);
}
