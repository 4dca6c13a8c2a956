#include "indcut/dual.hpp"

#include <bit>

#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"

namespace indcut {

SolveOutcome solve_by_dual_degree(const Graph& g) {
  Stopwatch clock;
  require_connected(g, "solve_by_dual_degree");
  if (g.vertex_count() < 2) throw ContractViolation("solve_by_dual_degree needs at least two vertices");
  SolveOutcome out;
  out.algorithm = "dual-degree";
  Vertex v = 0;
  for (Vertex u = 1; u < g.vertex_count(); ++u)
    if (g.degree(u) > g.degree(v)) v = u;
  const int k = g.vertex_count() - g.degree(v);
  out.parameter = "k=" + std::to_string(k);
  const VertexSet r = g.vertices() - g.closed_neighbors(v);
  const VertexSet nv = g.neighbors(v);

  std::optional<VertexSet> found;
  for_each_independent_subset(g, r - nv, [&](const VertexSet& s) {
    VertexSet candidate = s.with(v);
    ++out.stats["phase1_checked"];
    if (!is_independent(g, candidate) || !is_cutset(g, candidate)) return true;
    found = candidate;
    return false;
  });
  if (found) {
    out.stats["phase"] = 1;
    accept_witness(out, g, *found);
    out.time_ms = clock.elapsed_ms();
    return out;
  }

  std::vector<Vertex> rest(r.begin(), r.end());
  const int m = static_cast<int>(rest.size());
  if (m > 62) throw ContractViolation("dual-degree parameter too large: |R| = " + std::to_string(m));
  // Masks in increasing popcount; Gosper's hack walks each size class.
  auto next_guess = [m](std::uint64_t mask) -> std::uint64_t {
    const std::uint64_t low = mask & -mask;
    const std::uint64_t ripple = mask + low;
    std::uint64_t next = (((ripple ^ mask) >> 2) / low) | ripple;
    if (next >> m != 0) {
      int size = std::popcount(mask) + 1;
      next = size > m ? 0 : (std::uint64_t{1} << size) - 1;
    }
    return next;
  };
  for (std::uint64_t mask = m == 0 ? 0 : 1; mask != 0; mask = next_guess(mask)) {
    VertexSet r_prime = g.empty_set();
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) r_prime.insert(rest[static_cast<std::size_t>(i)]);
    ++out.stats["r_prime_guesses"];
    const VertexSet i_set = nv & g.neighbors(r_prime);
    if (!is_independent(g, i_set)) continue;
    Subgraph local = induced_subgraph(g, r | i_set);
    const VertexSet i_local = local.project(i_set);
    std::vector<VertexSet> classes;
    if (!i_local.empty()) classes.push_back(i_local);
    auto [reduced, map] = contract(local.graph, classes);
    if (reduced.vertex_count() > k + 1)
      throw InternalError("dual-degree reduction kept " + std::to_string(reduced.vertex_count()) +
                          " vertices for k = " + std::to_string(k));
    VertexSet seed(reduced.vertex_count());
    if (!i_local.empty()) seed.insert(map.forward[static_cast<std::size_t>(*i_local.begin())]);
    for_each_maximal_independent_superset(reduced, seed, [&](const VertexSet& s) {
      ++out.stats["mis_examined"];
      VertexSet candidate = i_set;
      for (Vertex c : s) candidate |= local.lift(map.inverse[static_cast<std::size_t>(c)]);
      if (!is_independent(g, candidate) || !is_cutset(g, candidate)) return true;
      found = candidate;
      return false;
    });
    if (found) break;
  }
  if (found) {
    out.stats["phase"] = 2;
    accept_witness(out, g, *found);
  }
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_dual_solution_size(const Graph& g, int k) {
  Stopwatch clock;
  require_connected(g, "solve_dual_solution_size");
  if (k < 0) throw ContractViolation("solve_dual_solution_size needs k >= 0");
  SolveOutcome out;
  out.algorithm = "dual-size";
  out.parameter = "k=" + std::to_string(k);
  std::optional<VertexSet> found;
  for_each_minimal_vertex_cover(g, k, [&](const VertexSet& cover) {
    ++out.stats["covers_examined"];
    VertexSet candidate = g.vertices() - cover;
    if (!is_cutset(g, candidate)) return true;
    found = candidate;
    return false;
  });
  if (found) accept_witness(out, g, *found);
  out.time_ms = clock.elapsed_ms();
  return out;
}

}  // namespace indcut
