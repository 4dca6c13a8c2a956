#pragma once

#include <set>
#include <vector>

#include "indcut/graph.hpp"

namespace indcut::testing {

inline VertexSet set_of(const Graph& g, std::initializer_list<Vertex> vs) { return VertexSet(g.vertex_count(), vs); }

inline Graph graph_of(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Graph::from_edges(n, e);
}

inline std::set<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::set<std::vector<Vertex>> out;
  for (const auto& s : sets) out.insert(s.to_vector());
  return out;
}

/// Every subset of V(g), as bit masks turned into sets; only for tiny graphs.
template <class F>
void for_each_subset(const Graph& g, F f) {
  const int n = g.vertex_count();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    VertexSet s = g.empty_set();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1UL) s.insert(v);
    f(s);
  }
}

}  // namespace indcut::testing
