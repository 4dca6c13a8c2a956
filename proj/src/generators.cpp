#include "indcut/generators.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "indcut/errors.hpp"

namespace indcut {
namespace {

constexpr int kRetryBudget = 1000;

template <class Build>
Graph until_connected(const char* what, std::uint64_t seed, Build build) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Graph g = build(rng);
    if (is_connected(g)) return g;
  }
  throw Error(std::string(what) + ": retry budget exhausted before a connected sample");
}

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

}  // namespace

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == rim ? 1 : v + 1);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph triangle_union(int t) {
  Graph g(3 * t);
  for (Vertex i = 0; i < t; ++i) {
    g.add_edge(3 * i, 3 * i + 1);
    g.add_edge(3 * i + 1, 3 * i + 2);
    g.add_edge(3 * i, 3 * i + 2);
  }
  return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  return until_connected("gnp", seed, [&](std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng, p)) g.add_edge(u, v);
    return g;
  });
}

Graph gnm(int n, int m, std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges) throw ContractViolation("gnm: edge count out of range");
  return until_connected("gnm", seed, [&](std::mt19937_64& rng) {
    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(max_edges));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(m));
    std::sort(all.begin(), all.end());
    return Graph::from_edges(n, all);
  });
}

Graph tree_plus_edges(int n, int m, std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_edges) throw ContractViolation("tree_plus_edges: need n - 1 <= m <= n(n-1)/2");
  std::mt19937_64 rng(seed);
  Graph g(n);
  if (n >= 2) {
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
    for (Vertex c : code) {
      Vertex leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      g.add_edge(leaf, c);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(c)];
    }
    Vertex u = -1;
    for (Vertex v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) {
        if (u == -1) {
          u = v;
        } else {
          g.add_edge(u, v);
          break;
        }
      }
  }
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  while (g.edge_count() < m) {
    Vertex u = any(rng), v = any(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

Graph random_chordal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    Vertex anchor = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    VertexSet clique = g.empty_set().with(anchor);
    std::vector<Vertex> pool = g.neighbors(anchor).to_vector();
    std::shuffle(pool.begin(), pool.end(), rng);
    for (Vertex w : pool)
      if (coin(rng, 0.5) && clique.is_subset_of(g.neighbors(w))) clique.insert(w);
    for (Vertex w : clique) g.add_edge(v, w);
  }
  return g;
}

Graph planted_dominating(int n, int k, double p, std::uint64_t seed) {
  if (k < 1 || k > n) throw ContractViolation("planted_dominating: need 1 <= k <= n");
  return until_connected("planted_dominating", seed, [&](std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex v = k; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<Vertex>(0, k - 1)(rng));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && coin(rng, p)) g.add_edge(u, v);
    return g;
  });
}

Graph random_split(int n, double p, std::uint64_t seed) {
  const int clique = (n + 1) / 2;
  return until_connected("random_split", seed, [&](std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex u = 0; u < clique; ++u)
      for (Vertex v = u + 1; v < clique; ++v) g.add_edge(u, v);
    for (Vertex v = clique; v < n; ++v)
      for (Vertex u = 0; u < clique; ++u)
        if (coin(rng, p)) g.add_edge(u, v);
    return g;
  });
}

Graph random_cotriangle_free(int n, double p, std::uint64_t seed) {
  return until_connected("random_cotriangle_free", seed, [&](std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    Graph h(n);
    for (auto [u, v] : pairs)
      if (coin(rng, p) && !h.neighbors(u).intersects(h.neighbors(v))) h.add_edge(u, v);
    return complement(h);
  });
}

Graph with_apices(const Graph& g, int count, double p, std::uint64_t seed) {
  const int n = g.vertex_count();
  return until_connected("with_apices", seed, [&](std::mt19937_64& rng) {
    Graph out(n + count);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (Vertex a = n; a < n + count; ++a)
      for (Vertex v = 0; v < a; ++v)
        if (coin(rng, p)) out.add_edge(a, v);
    return out;
  });
}

Graph line_graph(const Graph& g) {
  auto edges = g.edges();
  Graph out(static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return out;
}

}  // namespace indcut
