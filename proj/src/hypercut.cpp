#include "indcut/hypercut.hpp"

#include "indcut/errors.hpp"

namespace indcut {

void Hypergraph::add_edge(VertexSet e, Vertex tag) {
  edges.push_back(std::move(e));
  edge_tags.push_back(tag);
}

int Hypergraph::cut_value(const VertexSet& side) const {
  int value = 0;
  for (const auto& e : edges)
    if (e.intersects(side) && !e.is_subset_of(side)) ++value;
  return value;
}

HyperCut min_edge_cut(const Hypergraph& h) {
  const int n = h.vertex_count;
  if (n < 2) throw ContractViolation("min_edge_cut: needs at least two vertices");

  // groups[i] is the set of original vertices merged into super-vertex i.
  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) groups.push_back(VertexSet(n, {v}));
  int best = -1;
  VertexSet best_side(n);

  while (groups.size() > 1) {
    const std::size_t m = groups.size();
    std::vector<bool> placed(m, false);
    VertexSet prefix(n);
    std::vector<std::size_t> order;
    placed[0] = true;
    prefix |= groups[0];
    order.push_back(0);
    while (order.size() < m) {
      std::size_t pick = m;
      int pick_key = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (placed[j]) continue;
        int key = h.cut_value(prefix | groups[j]) - h.cut_value(groups[j]);
        if (pick == m || key < pick_key) {
          pick = j;
          pick_key = key;
        }
      }
      placed[pick] = true;
      prefix |= groups[pick];
      order.push_back(pick);
    }
    const std::size_t t = order[m - 1];
    const std::size_t s = order[m - 2];
    int value = h.cut_value(groups[t]);
    if (best == -1 || value < best) {
      best = value;
      best_side = groups[t];
    }
    groups[s] |= groups[t];
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(t));
  }

  HyperCut out;
  out.value = best;
  out.side = best_side.contains(0) ? best_side.complement() : best_side;
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (h.edges[i].intersects(out.side) && !h.edges[i].is_subset_of(out.side)) out.cut_edges.push_back(static_cast<int>(i));
  return out;
}

Hypergraph cutset_hypergraph(const Graph& g, const VertexSet& sp, std::vector<VertexSet>* components_out) {
  auto comps = components(g, sp);
  Hypergraph h;
  h.vertex_count = static_cast<int>(comps.size());
  for (Vertex v : sp) {
    VertexSet e(h.vertex_count);
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (g.neighbors(v).intersects(comps[i])) e.insert(static_cast<Vertex>(i));
    h.add_edge(std::move(e), v);
  }
  if (components_out) *components_out = std::move(comps);
  return h;
}

VertexSet shrink_independent_cutset(const Graph& g, const VertexSet& sp) {
  require_connected(g, "shrink_independent_cutset");
  if (!is_independent_cutset(g, sp))
    throw ContractViolation("shrink_independent_cutset: " + format_vertices(g, sp) + " is not an independent cutset");
  Hypergraph h = cutset_hypergraph(g, sp);
  HyperCut cut = min_edge_cut(h);
  VertexSet s = g.empty_set();
  for (int i : cut.cut_edges) s.insert(h.edge_tags[static_cast<std::size_t>(i)]);
  if (!is_independent_cutset(g, s))
    throw InternalError("shrink_independent_cutset: result " + format_vertices(g, s) + " is not a cutset");
  return s;
}

}  // namespace indcut
