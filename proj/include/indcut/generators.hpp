#pragma once

#include <cstdint>

#include "indcut/graph.hpp"

namespace indcut {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; the center is vertex 0.
Graph star_graph(int leaves);
/// Hub 0 joined to a rim cycle 1..rim.
Graph wheel_graph(int rim);
Graph petersen_graph();
/// t disjoint triangles (disconnected for t >= 2).
Graph triangle_union(int t);

// The random families below are deterministic for a fixed seed and resample until
// connected, throwing Error once the retry budget is spent.

Graph gnp(int n, double p, std::uint64_t seed);
Graph gnm(int n, int m, std::uint64_t seed);
/// A uniform random labelled spanning tree (Prüfer code) plus m - n + 1 uniform extra edges.
/// Connected by construction, so it reaches edge counts near n - 1 where gnm rarely does.
Graph tree_plus_edges(int n, int m, std::uint64_t seed);
/// Each new vertex attaches to a random clique inside the closed neighbourhood of a random
/// earlier vertex, so the insertion order reversed is a perfect elimination ordering.
Graph random_chordal(int n, std::uint64_t seed);
/// Vertices 0..k-1 form a dominating set: every other vertex is adjacent to at least one of
/// them; remaining pairs are edges with probability p.
Graph planted_dominating(int n, int k, double p, std::uint64_t seed);
/// A clique on the first ceil(n/2) vertices, an independent set on the rest, cross edges with
/// probability p.
Graph random_split(int n, double p, std::uint64_t seed);
/// Complement of a random triangle-free graph (hence P5-free).
Graph random_cotriangle_free(int n, double p, std::uint64_t seed);
/// g plus `count` new vertices, each adjacent to every old vertex with probability p.
Graph with_apices(const Graph& g, int count, double p, std::uint64_t seed);

Graph line_graph(const Graph& g);

}  // namespace indcut
