#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indcut/vertex_set.hpp"

namespace indcut {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over dense ids 0..n-1 with bit-set adjacency.
///
/// Labels carry the vertex names of the source file so that witnesses can be
/// reported in the caller's vocabulary. They default to the ids themselves.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws ContractViolation on self-loops, duplicate edges or out-of-range ids.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  /// Adds uv; returns false if it was already present. Throws on loops.
  bool add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
  /// N(S) = N[S] \ S.
  VertexSet neighbors(const VertexSet& s) const;
  VertexSet closed_neighbors(const VertexSet& s) const;

  int degree(Vertex v) const { return adj_[v].size(); }
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }
  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(Vertex v) const { return labels_[v]; }
  void set_labels(std::vector<std::uint64_t> labels);

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> labels_;
};

/// An induced subgraph together with the id translation back to its parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 for vertices outside the subgraph
  int parent_order = 0;

  VertexSet lift(const VertexSet& local) const;
  VertexSet project(const VertexSet& parent_set) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components of G - removed, ordered by their minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
/// The component of G - removed containing `start` (start must not be removed).
VertexSet component_of(const Graph& g, const VertexSet& removed, Vertex start);

bool is_connected(const Graph& g);
/// Throws ContractViolation if g is disconnected.
void require_connected(const Graph& g, const std::string& who);

bool is_independent(const Graph& g, const VertexSet& s);
/// Requires g connected. True iff G - s has at least two components.
bool is_cutset(const Graph& g, const VertexSet& s);
bool is_independent_cutset(const Graph& g, const VertexSet& s);
/// True iff no component of G - s meets both a \ s and b \ s.
bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);
bool is_dominating(const Graph& g, const VertexSet& x);
/// A vertex that x fails to dominate, or -1.
Vertex undominated_vertex(const Graph& g, const VertexSet& x);

/// forward maps every vertex of the input to its super-vertex; inverse lists the originals.
struct ContractionMap {
  std::vector<Vertex> forward;
  std::vector<VertexSet> inverse;

  VertexSet expand(const VertexSet& contracted) const;
};

/// Contracts every class to one vertex. Vertices outside all classes stay singletons.
/// Super-vertex ids follow the minimum original vertex of each class, so an empty
/// class list yields an identical graph and the identity map.
std::pair<Graph, ContractionMap> contract(const Graph& g, std::span<const VertexSet> classes);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// A BFS two-colouring failure: returns an odd cycle as a vertex sequence, or empty if bipartite.
std::vector<Vertex> find_odd_cycle(const Graph& g, const VertexSet& removed);

std::string format_vertices(const Graph& g, const VertexSet& s);

}  // namespace indcut
