#include "indcut/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/generators.hpp"

namespace indcut {
namespace {

void guard(const Graph& g, const char* who) {
  if (g.vertex_count() > kOracleMaxVertices)
    throw ContractViolation(std::string(who) + ": graph has more than " + std::to_string(kOracleMaxVertices) +
                            " vertices");
}

using Code = std::uint32_t;

Code encode(int n, const std::vector<std::uint32_t>& adj, const std::vector<int>& perm) {
  // perm[i] is the original vertex placed at position i.
  Code code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      code = (code << 1) | ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >>
                             perm[static_cast<std::size_t>(j)]) & 1U);
  return code;
}

// Minimum code over the orderings that list vertices by non-increasing degree. The set of such
// orderings is isomorphism invariant, so the minimum is a canonical form.
Code canonical_code(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  auto deg = [&](int v) { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); };
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return deg(a) > deg(b); });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(verts[static_cast<std::size_t>(j)]) == deg(verts[static_cast<std::size_t>(i)])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  std::vector<int> perm = verts;
  std::function<void(std::size_t)> walk = [&](std::size_t block) {
    if (block == blocks.size()) {
      best = std::min(best, encode(n, adj, perm));
      return;
    }
    auto [lo, hi] = blocks[block];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      walk(block + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  walk(0);
  return best;
}

Graph decode(int n, const std::vector<std::uint32_t>& adj) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adj[static_cast<std::size_t>(u)] >> v) & 1U) g.add_edge(u, v);
  return g;
}

bool mask_connected(int n, const std::vector<std::uint32_t>& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1U) next |= adj[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0U : (1U << n) - 1);
}

// All graphs on n vertices up to isomorphism, as adjacency masks in canonical-code order.
std::vector<std::vector<std::uint32_t>> all_graphs(int n) {
  if (n == 1) return {{0}};
  std::vector<std::vector<std::uint32_t>> out;
  std::set<Code> seen;
  std::vector<std::pair<Code, std::vector<std::uint32_t>>> found;
  for (const auto& base : all_graphs(n - 1)) {
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<std::uint32_t> adj = base;
      adj.push_back(mask);
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1U) adj[static_cast<std::size_t>(v)] |= 1U << (n - 1);
      Code c = canonical_code(n, adj);
      if (seen.insert(c).second) found.emplace_back(c, std::move(adj));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto& [c, adj] : found) out.push_back(std::move(adj));
  return out;
}

}  // namespace

SolveOutcome brute_decide(const Graph& g) {
  guard(g, "brute_decide");
  require_connected(g, "brute_decide");
  Stopwatch clock;
  SolveOutcome out;
  out.algorithm = "brute";
  std::optional<VertexSet> found;
  long long examined = 0;
  for_each_independent_subset(g, g.vertices(), [&](const VertexSet& s) {
    ++examined;
    if (!is_cutset(g, s)) return true;
    found = s;
    return false;
  });
  out.stats["subsets_examined"] = examined;
  if (found) accept_witness(out, g, *found);
  out.time_ms = clock.elapsed_ms();
  return out;
}

std::optional<VertexSet> brute_minimum(const Graph& g) {
  guard(g, "brute_minimum");
  require_connected(g, "brute_minimum");
  std::optional<VertexSet> best;
  for_each_independent_subset(g, g.vertices(), [&](const VertexSet& s) {
    if (best && (s.size() > best->size() || (s.size() == best->size() && !(s < *best)))) return true;
    if (is_cutset(g, s)) best = s;
    return true;
  });
  return best;
}

std::optional<VertexSet> brute_separating(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return brute_separating(g, a, b, g.vertices() - a - b);
}

std::optional<VertexSet> brute_separating(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          const VertexSet& within) {
  guard(g, "brute_separating");
  std::optional<VertexSet> best;
  for_each_independent_subset(g, within, [&](const VertexSet& s) {
    if (best && (s.size() > best->size() || (s.size() == best->size() && !(s < *best)))) return true;
    if ((a - s).empty() || (b - s).empty()) return true;
    if (separates(g, s, a, b)) best = s;
    return true;
  });
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw ContractViolation("connected_graphs: n must be in 1..7");
  std::vector<Graph> out;
  for (const auto& adj : all_graphs(n))
    if (mask_connected(n, adj)) out.push_back(decode(n, adj));
  return out;
}

std::vector<Graph> connected_graph_corpus(int n_max) {
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Graph> random_connected_corpus(int count, int n_min, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    double p = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    out.push_back(gnp(n, p, rng()));
  }
  return out;
}

}  // namespace indcut
