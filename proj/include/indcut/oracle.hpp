#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indcut/outcome.hpp"

namespace indcut {

/// Largest order the brute-force routines accept.
inline constexpr int kOracleMaxVertices = 20;

/// Exhaustive scan of independent subsets. Throws ContractViolation above kOracleMaxVertices.
SolveOutcome brute_decide(const Graph& g);
/// Minimum independent cutset (lexicographically first among the smallest), or nullopt.
std::optional<VertexSet> brute_minimum(const Graph& g);
/// Smallest independent S ⊆ within with A \ S and B \ S nonempty and in different components of
/// G - S. `within` defaults to V \ (A ∪ B).
std::optional<VertexSet> brute_separating(const Graph& g, const VertexSet& a, const VertexSet& b);
std::optional<VertexSet> brute_separating(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          const VertexSet& within);

/// All connected graphs on exactly n vertices up to isomorphism (n <= 7), in a fixed order.
std::vector<Graph> connected_graphs(int n);
/// connected_graphs(2..n_max) concatenated.
std::vector<Graph> connected_graph_corpus(int n_max);
/// `count` seeded connected G(n, p) samples with n in [n_min, n_max] and p in [0.15, 0.6].
std::vector<Graph> random_connected_corpus(int count, int n_min, int n_max, std::uint64_t seed);

}  // namespace indcut
