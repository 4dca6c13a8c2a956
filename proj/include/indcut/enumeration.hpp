#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "indcut/graph.hpp"

namespace indcut {

/// Visitors return true to keep going and false to stop; the for_each_* functions return
/// false exactly when a visitor stopped them.
using SetVisitor = std::function<bool(const VertexSet&)>;

/// (A, X') with A nonempty and X' independent, partitioning a ground set X.
struct Partition2 {
  VertexSet a;
  VertexSet xp;
};

/// (A, B, X') partitioning X: A and B nonempty, no A-B edge, X' independent.
struct Partition3 {
  VertexSet a;
  VertexSet b;
  VertexSet xp;
};

/// Pins parts of X to a side: a ⊆ A, b ⊆ B, xp ⊆ X'. Empty sets pin nothing.
struct PartitionFilter {
  VertexSet a;
  VertexSet b;
  VertexSet xp;

  static PartitionFilter none(int universe) { return {VertexSet(universe), VertexSet(universe), VertexSet(universe)}; }
  bool pins_sides() const { return !a.empty() || !b.empty(); }
  bool admits(const Partition2& p) const { return b.empty() && a.is_subset_of(p.a) && xp.is_subset_of(p.xp); }
  bool admits(const Partition3& p) const {
    return a.is_subset_of(p.a) && b.is_subset_of(p.b) && xp.is_subset_of(p.xp);
  }
};

// Maximal independent sets, grown by pivoting Bron-Kerbosch on the complement. Output order
// is deterministic.
bool for_each_maximal_independent_set(const Graph& g, const SetVisitor& visit);
/// All maximal independent sets containing `seed`. Throws ContractViolation if seed is not independent.
bool for_each_maximal_independent_superset(const Graph& g, const VertexSet& seed, const SetVisitor& visit);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
long long count_maximal_independent_sets(const Graph& g);

/// Moon-Moser: the largest possible number of maximal independent sets on n vertices.
long long moon_moser_bound(int n);

/// All inclusion-minimal vertex covers with at most k vertices, each once.
bool for_each_minimal_vertex_cover(const Graph& g, int k, const SetVisitor& visit);

bool for_each_partition2(const Graph& g, const VertexSet& x, const PartitionFilter& filter,
                         const std::function<bool(const Partition2&)>& visit);
inline bool for_each_partition2(const Graph& g, const VertexSet& x, const std::function<bool(const Partition2&)>& visit) {
  return for_each_partition2(g, x, PartitionFilter::none(g.vertex_count()), visit);
}

/// Without side pins each unordered {A, B} split appears once with min(A ∪ B) ∈ A.
/// Inconsistent filters simply produce nothing.
bool for_each_partition3(const Graph& g, const VertexSet& x, const PartitionFilter& filter,
                         const std::function<bool(const Partition3&)>& visit);
inline bool for_each_partition3(const Graph& g, const VertexSet& x, const std::function<bool(const Partition3&)>& visit) {
  return for_each_partition3(g, x, PartitionFilter::none(g.vertex_count()), visit);
}

/// The partition families of X when α(G[X]) <= c: pick an independent X' of size at most c,
/// then distribute the (at most c) components of G[X \ X'] between A and B. Emits the same
/// sets as for_each_partition2/3. Throws ContractViolation with an independent (c+1)-set the
/// moment one surfaces.
struct BoundedAlphaVisitors {
  std::function<bool(const Partition2&)> on_partition2;
  std::function<bool(const Partition3&)> on_partition3;
};
bool for_each_bounded_alpha_partition(const Graph& g, const VertexSet& x, int c, const PartitionFilter& filter,
                                      const BoundedAlphaVisitors& visit);

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g, const VertexSet& removed);
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) { return find_triangle(g, g.empty_set()); }
/// Vertices v1..v5 inducing the path v1-v2-v3-v4-v5.
std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph& g, const VertexSet& removed);
inline std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph& g) { return find_induced_p5(g, g.empty_set()); }
std::optional<Vertex> vertex_in_no_triangle(const Graph& g);
/// t pairwise non-adjacent edges (an induced matching), flattened as u1 v1 u2 v2 ...
std::optional<std::vector<Vertex>> find_induced_matching(const Graph& g, int t);

/// Independence number by branching; meant for small vertex sets.
int independence_number(const Graph& g, const VertexSet& within);
/// An independent subset of `within` of the given size, if one exists.
std::optional<VertexSet> independent_subset_of_size(const Graph& g, const VertexSet& within, int size);

/// Every independent subset of `within`, grown in increasing-id order starting from ∅.
bool for_each_independent_subset(const Graph& g, const VertexSet& within, const SetVisitor& visit);

}  // namespace indcut
