#pragma once

#include "indcut/outcome.hpp"

namespace indcut {

/// Parameter k = n - Δ. Phase 1 tries the cutsets through a maximum-degree vertex v, Phase 2
/// guesses the part R' of R = V \ N[v] cut off from v.
SolveOutcome solve_by_dual_degree(const Graph& g);

/// Yes iff g has an independent cutset of size at least n - k.
SolveOutcome solve_dual_solution_size(const Graph& g, int k);

}  // namespace indcut
