#pragma once

#include <functional>
#include <optional>
#include <string>

#include "indcut/outcome.hpp"

namespace indcut {

enum class DominatingShape { clique, p3, other };

struct ShapedDominatingSet {
  VertexSet set;
  DominatingShape shape = DominatingShape::other;
  /// "scan", "minimal-cds" or "alpha-scan": which step of the search produced the set.
  std::string rung;
};

/// Singletons, edges, P3s and triangles are scanned for domination first, then an inclusion-minimal
/// connected dominating set is accepted if it induces a clique or a P3.
std::optional<ShapedDominatingSet> find_clique_or_p3_dominating(const Graph& g);

/// A dominating set with α(G[X]) <= c: every vertex set of size <= c + 1 is scanned, then the
/// minimal connected dominating set is tried.
std::optional<ShapedDominatingSet> find_alpha_dominating(const Graph& g, int c);

/// Throws ContractViolation with an induced P5 if g is not P5-free.
SolveOutcome solve_p5_free(const Graph& g);

/// A smallest set of at most k vertices meeting every induced P5, by five-way branching.
std::optional<VertexSet> p5_hitting_set(const Graph& g, int k);

/// Throws ParameterTooSmall when no P5-hitting set of size <= k exists.
SolveOutcome solve_by_p5_hitting(const Graph& g, int k);

/// Throws ContractViolation if X does not dominate g or α(G[X]) > c.
SolveOutcome solve_alpha_dominated(const Graph& g, const VertexSet& x, int c);

/// Throws ContractViolation with t pairwise independent edges if g is not tK2-free.
SolveOutcome solve_tk2_free(const Graph& g, int t);

/// g - X must split into components that each get an α_c-dominating set; components where none
/// is found fall back to the whole component as dominating set (counted in stats).
SolveOutcome solve_by_alpha_deletion(const Graph& g, const VertexSet& x, int c);

using ComponentDominator = std::function<std::optional<ShapedDominatingSet>(const Graph&)>;

/// The two-case scheme over a deletion set X: components K_i of g - X, dominating sets X_i of
/// g[K_i], 2^|X| guesses for the single-component case and 3^|X| for the split case.
SolveOutcome solve_by_deletion_set(const Graph& g, const VertexSet& x, const ComponentDominator& dominator);

}  // namespace indcut
