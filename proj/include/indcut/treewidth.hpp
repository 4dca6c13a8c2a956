#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "indcut/outcome.hpp"

namespace indcut {

/// Rooted tree over node ids 0..size-1 with one bag per node.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<int> parent;  // -1 at the root
  std::vector<std::vector<int>> children;
  int root = -1;

  int size() const { return static_cast<int>(bags.size()); }
  int width() const;
  int add_node(VertexSet bag, int parent_node);
};

enum class NodeKind { leaf, introduce, forget, join };

struct NiceTreeDecomposition {
  TreeDecomposition td;
  std::vector<NodeKind> kind;
  std::vector<Vertex> vertex;  // introduced or forgotten vertex, -1 otherwise
};

struct RefinedNiceTreeDecomposition {
  NiceTreeDecomposition nice;
  std::vector<VertexSet> refined;  // U_t
  int ell = 0;
  int residual_alpha = 0;  // max_t α(G[X_t \ U_t])
};

/// (T1) bags cover V, (T2) every edge lies in a bag, (T3) each vertex's nodes form a subtree,
/// plus tree shape. Throws ContractViolation naming the failed condition.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);
/// The above plus empty root and leaf bags and the exact introduce / forget / join relations.
void validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);
void validate_refined(const Graph& g, const RefinedNiceTreeDecomposition& rtd);

/// Perfect elimination ordering (first eliminated first) by maximum cardinality search, or absent.
/// On absence `hole` receives a chordless cycle of length at least four.
std::optional<std::vector<Vertex>> recognize_chordal(const Graph& g, std::vector<Vertex>* hole = nullptr);
/// Bags are exactly the maximal cliques. Components of a disconnected input are chained together.
/// Throws ContractViolation with a chordless cycle if g is not chordal.
TreeDecomposition clique_tree(const Graph& g);

/// Same width; children are processed in order of their smallest bag vertex.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

RefinedNiceTreeDecomposition refine_with_deletion_set(const Graph& g, const NiceTreeDecomposition& ntd,
                                                      const VertexSet& u);

/// Decomposition whose bags are a vertex plus its later neighbours in the filled graph.
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);
/// Minimum-width decomposition by dynamic programming over vertex subsets (n <= 20).
TreeDecomposition optimal_tree_decomposition(const Graph& g);

/// A true DP entry with global vertex sets.
struct DpEntry {
  VertexSet s, a, b;
};

/// Per node, every key (S, A, B) whose value is true: there is an independent S* ⊆ V_t with
/// S* ∩ X_t = S such that G[V_t] - S* splits into two nonempty vertex-disjoint parts P ⊇ A and
/// Q ⊇ B with no edge between them.
std::vector<std::vector<DpEntry>> dp_true_entries(const Graph& g, const RefinedNiceTreeDecomposition& rtd);

SolveOutcome dp_solve(const Graph& g, const RefinedNiceTreeDecomposition& rtd);

/// Throws ContractViolation (with a chordless cycle) if g - X is not chordal.
SolveOutcome solve_by_chordal_deletion(const Graph& g, const VertexSet& x);

/// Smallest X with g - X chordal and |X| <= k, for k <= 4.
std::optional<VertexSet> brute_chordal_deletion(const Graph& g, int k);

/// Line format: "node <id> [kind=<leaf|introduce:v|forget:w|join>] bag=<labels> [refined=<labels>]",
/// "edge <parent> <child>", "root <id>"; '#' starts a comment. Labels are comma separated.
/// Without kinds the tree is made nice; refined sets default to empty.
RefinedNiceTreeDecomposition read_decomposition(std::istream& in, const Graph& g);
void write_decomposition(std::ostream& out, const Graph& g, const RefinedNiceTreeDecomposition& rtd);

}  // namespace indcut
