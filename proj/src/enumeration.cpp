#include "indcut/enumeration.hpp"

#include <algorithm>

#include "indcut/errors.hpp"

namespace indcut {
namespace {

bool grow_maximal(const Graph& g, const VertexSet& chosen, VertexSet candidates, VertexSet excluded,
                  const SetVisitor& visit) {
  if (candidates.empty()) return excluded.empty() ? visit(chosen) : true;

  // Pivot: the vertex of candidates ∪ excluded leaving the fewest branches P ∩ N[u].
  Vertex pivot = -1;
  int best = -1;
  for (const VertexSet* pool : {&candidates, &excluded})
    for (Vertex u : *pool) {
      int keep = candidates.size() - candidates.intersection_size(g.closed_neighbors(u));
      if (keep > best) {
        best = keep;
        pivot = u;
      }
    }
  const VertexSet branches = candidates & g.closed_neighbors(pivot);
  for (Vertex v : branches) {
    const VertexSet blocked = g.closed_neighbors(v);
    if (!grow_maximal(g, chosen.with(v), candidates - blocked, excluded - blocked, visit)) return false;
    candidates.erase(v);
    excluded.insert(v);
  }
  return true;
}

bool cover_search(const Graph& g, int k, VertexSet& cover, VertexSet& excluded, const SetVisitor& visit) {
  Edge open{-1, -1};
  for (Vertex u = 0; u < g.vertex_count() && open.first == -1; ++u) {
    if (cover.contains(u)) continue;
    Vertex v = (g.neighbors(u) - cover).next(u);
    if (v != -1) open = {u, v};
  }
  if (open.first == -1) {
    for (Vertex c : cover)
      if (g.neighbors(c).is_subset_of(cover)) return true;  // not minimal
    return visit(cover);
  }
  if (cover.size() >= k) return true;

  const Vertex u = open.first;
  cover.insert(u);
  bool go_on = cover_search(g, k, cover, excluded, visit);
  cover.erase(u);
  if (!go_on) return false;

  const VertexSet forced = g.neighbors(u) - cover;
  if (forced.intersects(excluded) || cover.size() + forced.size() > k) return true;
  VertexSet wider = cover | forced;
  excluded.insert(u);
  go_on = cover_search(g, k, wider, excluded, visit);
  excluded.erase(u);
  return go_on;
}

struct Partition3Walk {
  const Graph& g;
  const std::vector<Vertex>& order;
  const PartitionFilter& filter;
  const std::function<bool(const Partition3&)>& visit;
  bool canonical;
  Partition3 cur;

  bool run(std::size_t i) {
    if (i == order.size()) {
      if (cur.a.empty() || cur.b.empty()) return true;
      return visit(cur);
    }
    const Vertex v = order[i];
    const VertexSet& nv = g.neighbors(v);
    const bool pinned_a = filter.a.contains(v);
    const bool pinned_b = filter.b.contains(v);
    const bool pinned_x = filter.xp.contains(v);
    const bool free = !pinned_a && !pinned_b && !pinned_x;

    if ((free || pinned_a) && !nv.intersects(cur.b)) {
      cur.a.insert(v);
      bool go_on = run(i + 1);
      cur.a.erase(v);
      if (!go_on) return false;
    }
    if ((free || pinned_b) && !nv.intersects(cur.a) && !(canonical && cur.a.empty())) {
      cur.b.insert(v);
      bool go_on = run(i + 1);
      cur.b.erase(v);
      if (!go_on) return false;
    }
    if ((free || pinned_x) && !nv.intersects(cur.xp)) {
      cur.xp.insert(v);
      bool go_on = run(i + 1);
      cur.xp.erase(v);
      if (!go_on) return false;
    }
    return true;
  }
};

struct Partition2Walk {
  const Graph& g;
  const std::vector<Vertex>& order;
  const PartitionFilter& filter;
  const std::function<bool(const Partition2&)>& visit;
  Partition2 cur;

  bool run(std::size_t i) {
    if (i == order.size()) return cur.a.empty() ? true : visit(cur);
    const Vertex v = order[i];
    const bool pinned_a = filter.a.contains(v);
    const bool pinned_x = filter.xp.contains(v);
    if (!pinned_x) {
      cur.a.insert(v);
      bool go_on = run(i + 1);
      cur.a.erase(v);
      if (!go_on) return false;
    }
    if (!pinned_a && !g.neighbors(v).intersects(cur.xp)) {
      cur.xp.insert(v);
      bool go_on = run(i + 1);
      cur.xp.erase(v);
      if (!go_on) return false;
    }
    return true;
  }
};

bool filter_consistent(const PartitionFilter& f, const VertexSet& x) {
  if (f.a.intersects(f.b) || f.a.intersects(f.xp) || f.b.intersects(f.xp)) return false;
  return (f.a | f.b | f.xp).is_subset_of(x);
}

bool independent_walk(const Graph& g, const VertexSet& pool, VertexSet& cur, Vertex from, const SetVisitor& visit) {
  if (!visit(cur)) return false;
  for (Vertex v = pool.next(from - 1); v != -1; v = pool.next(v)) {
    if (g.neighbors(v).intersects(cur)) continue;
    cur.insert(v);
    bool go_on = independent_walk(g, pool, cur, v + 1, visit);
    cur.erase(v);
    if (!go_on) return false;
  }
  return true;
}

int alpha_rec(const Graph& g, VertexSet s) {
  int taken = 0;
  while (true) {
    if (s.empty()) return taken;
    Vertex low = -1;
    Vertex high = -1;
    int low_deg = 1 << 30;
    int high_deg = -1;
    for (Vertex v : s) {
      int d = g.neighbors(v).intersection_size(s);
      if (d < low_deg) {
        low_deg = d;
        low = v;
      }
      if (d > high_deg) {
        high_deg = d;
        high = v;
      }
    }
    if (low_deg <= 1) {
      s -= g.closed_neighbors(low);
      ++taken;
      continue;
    }
    return taken + std::max(alpha_rec(g, s.without(high)), 1 + alpha_rec(g, s - g.closed_neighbors(high)));
  }
}

bool find_independent(const Graph& g, VertexSet pool, VertexSet& cur, int size) {
  if (cur.size() == size) return true;
  if (cur.size() + pool.size() < size) return false;
  for (Vertex v : pool) {
    pool.erase(v);
    cur.insert(v);
    if (find_independent(g, pool - g.neighbors(v), cur, size)) return true;
    cur.erase(v);
  }
  return false;
}

}  // namespace

bool for_each_maximal_independent_set(const Graph& g, const SetVisitor& visit) {
  return grow_maximal(g, g.empty_set(), g.vertices(), g.empty_set(), visit);
}

bool for_each_maximal_independent_superset(const Graph& g, const VertexSet& seed, const SetVisitor& visit) {
  if (!is_independent(g, seed)) throw ContractViolation("maximal_independent_supersets: seed is not independent");
  return grow_maximal(g, seed, g.vertices() - g.closed_neighbors(seed), g.empty_set(), visit);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

long long count_maximal_independent_sets(const Graph& g) {
  long long count = 0;
  for_each_maximal_independent_set(g, [&](const VertexSet&) {
    ++count;
    return true;
  });
  return count;
}

long long moon_moser_bound(int n) {
  auto pow3 = [](int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
  };
  if (n <= 1) return 1;
  switch (n % 3) {
    case 0:
      return pow3(n / 3);
    case 1:
      return 4 * pow3((n - 4) / 3);
    default:
      return 2 * pow3((n - 2) / 3);
  }
}

bool for_each_minimal_vertex_cover(const Graph& g, int k, const SetVisitor& visit) {
  if (k < 0) return true;
  VertexSet cover = g.empty_set();
  VertexSet excluded = g.empty_set();
  return cover_search(g, k, cover, excluded, visit);
}

bool for_each_partition2(const Graph& g, const VertexSet& x, const PartitionFilter& filter,
                         const std::function<bool(const Partition2&)>& visit) {
  if (!filter_consistent(filter, x) || !filter.b.empty()) return true;
  const auto order = x.to_vector();
  Partition2Walk walk{g, order, filter, visit, {g.empty_set(), g.empty_set()}};
  return walk.run(0);
}

bool for_each_partition3(const Graph& g, const VertexSet& x, const PartitionFilter& filter,
                         const std::function<bool(const Partition3&)>& visit) {
  if (!filter_consistent(filter, x)) return true;
  const auto order = x.to_vector();
  Partition3Walk walk{g, order, filter, visit, !filter.pins_sides(), {g.empty_set(), g.empty_set(), g.empty_set()}};
  return walk.run(0);
}

bool for_each_bounded_alpha_partition(const Graph& g, const VertexSet& x, int c, const PartitionFilter& filter,
                                      const BoundedAlphaVisitors& visit) {
  if (!filter_consistent(filter, x)) return true;
  if (!is_independent(g, filter.xp)) return true;
  const VertexSet allowed = x - filter.a - filter.b;

  auto violation = [&](const VertexSet& witness) {
    throw ContractViolation("alpha(G[X]) exceeds " + std::to_string(c) + ": independent set " +
                            format_vertices(g, witness));
  };

  auto emit = [&](const VertexSet& xp) -> bool {
    const VertexSet rest = x - xp;
    if (rest.empty()) return true;
    std::vector<VertexSet> comps = components(g, g.vertices() - rest);
    if (static_cast<int>(comps.size()) > c) {
      VertexSet witness = g.empty_set();
      for (int i = 0; i <= c; ++i) witness.insert(comps[static_cast<std::size_t>(i)].first());
      violation(witness);
    }
    if (visit.on_partition2) {
      Partition2 p{rest, xp};
      if (filter.admits(p) && !visit.on_partition2(p)) return false;
    }
    if (visit.on_partition3 && comps.size() >= 2) {
      const std::size_t count = comps.size();
      const bool canonical = !filter.pins_sides();
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << count); ++mask) {
        if (canonical && !(mask & 1U)) continue;
        Partition3 p{g.empty_set(), g.empty_set(), xp};
        for (std::size_t i = 0; i < count; ++i) ((mask >> i) & 1U ? p.a : p.b) |= comps[i];
        if (filter.admits(p) && !visit.on_partition3(p)) return false;
      }
    }
    return true;
  };

  if (filter.xp.size() > c) violation(filter.xp);
  VertexSet cur = filter.xp;
  std::function<bool(Vertex)> walk = [&](Vertex from) -> bool {
    if (cur.size() == c) {
      VertexSet extend = x - cur - g.neighbors(cur);
      if (!extend.empty()) violation(cur.with(extend.first()));
    }
    if (!emit(cur)) return false;
    if (cur.size() == c) return true;
    for (Vertex v = allowed.next(from - 1); v != -1; v = allowed.next(v)) {
      if (cur.contains(v) || g.neighbors(v).intersects(cur)) continue;
      cur.insert(v);
      bool go_on = walk(v + 1);
      cur.erase(v);
      if (!go_on) return false;
    }
    return true;
  };
  return walk(0);
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g, const VertexSet& removed) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (removed.contains(u)) continue;
    const VertexSet nu = g.neighbors(u) - removed;
    for (Vertex v = nu.next(u); v != -1; v = nu.next(v)) {
      Vertex w = (nu & g.neighbors(v)).next(v);
      if (w != -1) return std::array<Vertex, 3>{u, v, w};
    }
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph& g, const VertexSet& removed) {
  std::array<Vertex, 5> path{};
  VertexSet on_path = g.empty_set();
  // Vertices adjacent to some path vertex other than the current end.
  std::function<bool(int, VertexSet)> extend = [&](int len, VertexSet blocked) -> bool {
    if (len == 5) return path[0] < path[4];
    const Vertex end = path[static_cast<std::size_t>(len - 1)];
    const VertexSet options = g.neighbors(end) - removed - on_path - blocked;
    const VertexSet next_blocked = blocked | g.neighbors(end);
    for (Vertex w : options) {
      path[static_cast<std::size_t>(len)] = w;
      on_path.insert(w);
      bool found = extend(len + 1, next_blocked);
      on_path.erase(w);
      if (found) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (removed.contains(s)) continue;
    path[0] = s;
    on_path.insert(s);
    bool found = extend(1, g.empty_set());
    on_path.erase(s);
    if (found) return path;
  }
  return std::nullopt;
}

std::optional<Vertex> vertex_in_no_triangle(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (is_independent(g, g.neighbors(v))) return v;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced_matching(const Graph& g, int t) {
  if (t <= 0) return std::vector<Vertex>{};
  const auto edges = g.edges();
  std::vector<Vertex> chosen;
  std::function<bool(std::size_t, const VertexSet&)> pick = [&](std::size_t from, const VertexSet& blocked) -> bool {
    if (static_cast<int>(chosen.size()) == 2 * t) return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (blocked.contains(u) || blocked.contains(v)) continue;
      chosen.push_back(u);
      chosen.push_back(v);
      if (pick(i + 1, blocked | g.closed_neighbors(u) | g.closed_neighbors(v))) return true;
      chosen.resize(chosen.size() - 2);
    }
    return false;
  };
  if (pick(0, g.empty_set())) return chosen;
  return std::nullopt;
}

int independence_number(const Graph& g, const VertexSet& within) { return alpha_rec(g, within); }

std::optional<VertexSet> independent_subset_of_size(const Graph& g, const VertexSet& within, int size) {
  VertexSet cur = g.empty_set();
  if (find_independent(g, within, cur, size)) return cur;
  return std::nullopt;
}

bool for_each_independent_subset(const Graph& g, const VertexSet& within, const SetVisitor& visit) {
  VertexSet cur = g.empty_set();
  return independent_walk(g, within, cur, 0, visit);
}

}  // namespace indcut
