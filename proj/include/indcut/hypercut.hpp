#pragma once

#include <vector>

#include "indcut/graph.hpp"

namespace indcut {

struct Hypergraph {
  int vertex_count = 0;
  std::vector<VertexSet> edges;
  /// The graph vertex each hyperedge stands for, or -1.
  std::vector<Vertex> edge_tags;

  void add_edge(VertexSet e, Vertex tag = -1);
  /// Number of hyperedges meeting both `side` and its complement.
  int cut_value(const VertexSet& side) const;
};

struct HyperCut {
  int value = 0;
  /// The side not containing vertex 0.
  VertexSet side;
  std::vector<int> cut_edges;
};

/// Global minimum edge cut by Queyranne's pendant-pair contraction. Ties go to the first cut
/// found. Throws ContractViolation below two vertices.
HyperCut min_edge_cut(const Hypergraph& h);

/// The hypergraph whose vertices are the components of G - sp, with one hyperedge per
/// v ∈ sp holding the components adjacent to v.
Hypergraph cutset_hypergraph(const Graph& g, const VertexSet& sp, std::vector<VertexSet>* components_out = nullptr);

/// A smallest independent cutset inside the independent cutset sp.
VertexSet shrink_independent_cutset(const Graph& g, const VertexSet& sp);

}  // namespace indcut
