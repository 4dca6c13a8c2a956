#include "indcut/exact.hpp"

#include <algorithm>
#include <thread>

#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/hypercut.hpp"

namespace indcut {
namespace {

SolveOutcome scan_maximal_sets(const Graph& g, const std::string& algorithm) {
  Stopwatch clock;
  SolveOutcome out;
  out.algorithm = algorithm;
  out.parameter = "n=" + std::to_string(g.vertex_count());
  require_connected(g, algorithm);
  long long examined = 0;
  std::optional<VertexSet> found;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    ++examined;
    if (!is_cutset(g, s)) return true;
    found = s;
    return false;
  });
  out.stats["mis_examined"] = examined;
  if (found) accept_witness(out, g, *found);
  out.time_ms = clock.elapsed_ms();
  return out;
}

}  // namespace

SolveOutcome decide_exact(const Graph& g) { return scan_maximal_sets(g, "exact"); }

std::optional<SolveOutcome> decide_exact_fastpath_trianglefree(const Graph& g) {
  Stopwatch clock;
  require_connected(g, "trianglefree-fastpath");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    if (!is_independent(g, nv) || !is_cutset(g, nv)) continue;
    SolveOutcome out;
    out.algorithm = "trianglefree-fastpath";
    out.parameter = "v=" + std::to_string(g.label(v));
    accept_witness(out, g, nv);
    out.time_ms = clock.elapsed_ms();
    return out;
  }
  return std::nullopt;
}

std::optional<VertexSet> minimum_independent_cutset(const Graph& g, int threads) {
  require_connected(g, "minimum_independent_cutset");
  std::vector<VertexSet> sets = maximal_independent_sets(g);
  threads = std::max(1, std::min<int>(threads, static_cast<int>(sets.size())));
  // Each worker keeps the first minimum of its contiguous slice; slices are merged in order.
  std::vector<std::optional<std::pair<std::size_t, VertexSet>>> best(static_cast<std::size_t>(threads));
  auto work = [&](int w) {
    const std::size_t lo = sets.size() * static_cast<std::size_t>(w) / static_cast<std::size_t>(threads);
    const std::size_t hi = sets.size() * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(threads);
    auto& mine = best[static_cast<std::size_t>(w)];
    for (std::size_t i = lo; i < hi; ++i) {
      if (!is_cutset(g, sets[i])) continue;
      VertexSet s = shrink_independent_cutset(g, sets[i]);
      if (!mine || s.size() < mine->second.size() || (s.size() == mine->second.size() && s < mine->second))
        mine.emplace(i, std::move(s));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::optional<VertexSet> result;
  for (auto& b : best)
    if (b && (!result || b->second.size() < result->size() || (b->second.size() == result->size() && b->second < *result)))
      result = b->second;
  return result;
}

SolveOutcome decide_2k2_free(const Graph& g) {
  if (auto m = find_induced_matching(g, 2)) {
    const auto& e = *m;
    throw ContractViolation("decide_2k2_free: induced 2K2 on edges " + std::to_string(g.label(e[0])) + "-" +
                            std::to_string(g.label(e[1])) + " and " + std::to_string(g.label(e[2])) + "-" +
                            std::to_string(g.label(e[3])));
  }
  SolveOutcome out = scan_maximal_sets(g, "2k2");
  const long long n = g.vertex_count();
  out.stats["mis_quadratic_bound"] = n * n + 1;
  return out;
}

}  // namespace indcut
