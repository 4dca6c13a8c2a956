#pragma once

#include <optional>

#include "indcut/outcome.hpp"

namespace indcut {

/// Scans the maximal independent sets and stops at the first one that is a cutset.
/// Throws ContractViolation on disconnected input.
SolveOutcome decide_exact(const Graph& g);

/// N(v) for the first vertex v in no triangle whose neighbourhood is a cutset.
std::optional<SolveOutcome> decide_exact_fastpath_trianglefree(const Graph& g);

/// Shrinks every cutset among the maximal independent sets and keeps the smallest result
/// (lexicographically first on ties, so the answer does not depend on `threads`).
std::optional<VertexSet> minimum_independent_cutset(const Graph& g, int threads = 1);

/// Same answers as decide_exact; rejects graphs with an induced 2K2.
SolveOutcome decide_2k2_free(const Graph& g);

}  // namespace indcut
