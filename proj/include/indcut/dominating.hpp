#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indcut/enumeration.hpp"
#include "indcut/outcome.hpp"

namespace indcut {

/// How the split case grows the forced set I and the forbidden set F.
///  algorithm1: exactly the loop of the published algorithm, over the N_A-N_B edges of G.
///  closed: also follows the edges that G' gains through components of G[F'], and forbids every
///          G-neighbour of a forced vertex.
enum class Propagation { algorithm1, closed };

using Stats = std::map<std::string, long long>;
using CandidateCheck = std::function<bool(const VertexSet&)>;

struct DominatingOptions {
  /// Pins on X (A* ⊆ A, B* ⊆ B, X* ⊆ X'); an empty-universe filter pins nothing.
  PartitionFilter filter;
  /// Negative: enumerate the full partition families. Otherwise α(G[X]) <= alpha_bound is assumed
  /// and the bounded-α enumeration is used.
  int alpha_bound = -1;
  /// Replaces "independent cutset of g" as the acceptance test for a candidate.
  CandidateCheck accept;
  Propagation propagation = Propagation::algorithm1;
};

struct SplitState {
  Partition3 partition;
  VertexSet n, na, nb;
  VertexSet forced;     // I
  VertexSet forbidden;  // F
  VertexSet outer;      // F' = F \ (N_A ∪ N_B)
  /// Neighbourhoods used by the propagation loop, indexed by vertex of N_A ∪ N_B.
  std::vector<VertexSet> links;
  /// (N(K) ∩ N_A, N(K) ∩ N_B) per component K of G[F'].
  std::vector<std::pair<VertexSet, VertexSet>> bridges;
};

/// Initialises I and F for the partition and propagates to a fixpoint. Absent on the bail-out condition.
std::optional<SplitState> propagate_split(const Graph& g, const VertexSet& x, const Partition3& p, Propagation mode);

/// Independent subsets of X (respecting the filter) that pass the acceptance test.
std::optional<VertexSet> precheck_subsets(const Graph& g, const VertexSet& x, const DominatingOptions& opt, Stats& stats);
/// X \ S* inside at most one component of G - S*.
std::optional<VertexSet> no_split_case(const Graph& g, const VertexSet& x, const DominatingOptions& opt, Stats& stats);
/// X \ S* spread over at least two components: one 2-SAT instance per (A, B, X').
std::optional<VertexSet> split_case(const Graph& g, const VertexSet& x, const DominatingOptions& opt, Stats& stats);

/// Pre-check, then the no-split case, then the split case. Throws ContractViolation if g is
/// disconnected or X does not dominate g.
SolveOutcome solve_with_dominating_set(const Graph& g, const VertexSet& x, const DominatingOptions& opt = {});

/// X = the first maximal independent set.
SolveOutcome solve_by_independence_number(const Graph& g);

/// A smallest triangle-hitting set of size at most k, by three-way branching.
std::optional<VertexSet> triangle_hitting_set(const Graph& g, int k);
/// Throws ParameterTooSmall when no triangle-hitting set of size <= k exists.
SolveOutcome solve_by_triangle_hitting(const Graph& g, int k);
/// Throws ContractViolation with an odd cycle if g - oct is not bipartite.
SolveOutcome solve_by_oct(const Graph& g, const VertexSet& oct);

}  // namespace indcut
