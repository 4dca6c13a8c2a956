#include "indcut/structured.hpp"

#include <cmath>

#include "indcut/dominating.hpp"
#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/exact.hpp"

namespace indcut {
namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!s.without(v).is_subset_of(g.neighbors(v))) return false;
  return true;
}

DominatingShape shape_of(const Graph& g, const VertexSet& s) {
  if (is_clique(g, s)) return DominatingShape::clique;
  if (s.size() == 3 && is_connected(induced_subgraph(g, s).graph)) return DominatingShape::p3;
  return DominatingShape::other;
}

// Greedy removal in decreasing id order keeps a connected dominating set minimal.
VertexSet minimal_connected_dominating(const Graph& g) {
  VertexSet cds = g.vertices();
  for (Vertex v = g.vertex_count() - 1; v >= 0; --v) {
    VertexSet trial = cds.without(v);
    if (trial.empty() || !is_dominating(g, trial)) continue;
    if (!is_connected(induced_subgraph(g, trial).graph)) continue;
    cds = trial;
  }
  return cds;
}

std::string format_path(const Graph& g, const std::array<Vertex, 5>& path) {
  std::string s;
  for (Vertex v : path) s += (s.empty() ? "" : "-") + std::to_string(g.label(v));
  return s;
}

}  // namespace

std::optional<ShapedDominatingSet> find_clique_or_p3_dominating(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  std::vector<VertexSet> closed;
  for (Vertex v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < n; ++u)
    if (closed[static_cast<std::size_t>(u)] == all)
      return ShapedDominatingSet{g.empty_set().with(u), DominatingShape::clique, "scan"};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      if ((closed[static_cast<std::size_t>(u)] | closed[static_cast<std::size_t>(v)]) == all)
        return ShapedDominatingSet{VertexSet(n, {u, v}), DominatingShape::clique, "scan"};
    }
  // Connected triples: a centre m with two neighbours.
  for (Vertex m = 0; m < n; ++m) {
    const auto nm = g.neighbors(m).to_vector();
    for (std::size_t i = 0; i < nm.size(); ++i)
      for (std::size_t j = i + 1; j < nm.size(); ++j) {
        Vertex a = nm[i], b = nm[j];
        if ((closed[static_cast<std::size_t>(m)] | closed[static_cast<std::size_t>(a)] | closed[static_cast<std::size_t>(b)]) != all)
          continue;
        VertexSet s(n, {a, m, b});
        return ShapedDominatingSet{s, g.adjacent(a, b) ? DominatingShape::clique : DominatingShape::p3, "scan"};
      }
  }
  if (!is_connected(g)) return std::nullopt;
  VertexSet cds = minimal_connected_dominating(g);
  DominatingShape shape = shape_of(g, cds);
  if (shape == DominatingShape::other) return std::nullopt;
  return ShapedDominatingSet{cds, shape, "minimal-cds"};
}

std::optional<ShapedDominatingSet> find_alpha_dominating(const Graph& g, int c) {
  const int n = g.vertex_count();
  if (n == 0 || c < 1) return std::nullopt;
  std::optional<ShapedDominatingSet> found;
  VertexSet cur = g.empty_set();
  VertexSet covered = g.empty_set();
  std::function<bool(Vertex)> grow = [&](Vertex from) -> bool {
    if (!cur.empty() && covered == g.vertices() && independence_number(g, cur) <= c) {
      found = ShapedDominatingSet{cur, shape_of(g, cur), "alpha-scan"};
      return true;
    }
    if (cur.size() == c + 1) return false;
    for (Vertex v = from; v < n; ++v) {
      VertexSet before = covered;
      cur.insert(v);
      covered |= g.closed_neighbors(v);
      if (grow(v + 1)) return true;
      cur.erase(v);
      covered = before;
    }
    return false;
  };
  if (grow(0)) return found;
  if (!is_connected(g)) return std::nullopt;
  VertexSet cds = minimal_connected_dominating(g);
  if (independence_number(g, cds) > c) return std::nullopt;
  return ShapedDominatingSet{cds, shape_of(g, cds), "minimal-cds"};
}

SolveOutcome solve_p5_free(const Graph& g) {
  Stopwatch clock;
  require_connected(g, "solve_p5_free");
  if (auto p = find_induced_p5(g)) throw ContractViolation("graph has an induced P5: " + format_path(g, *p));
  auto x = find_clique_or_p3_dominating(g);
  int c = 0;
  if (x) {
    c = x->shape == DominatingShape::clique ? 1 : 2;
  } else {
    x = find_alpha_dominating(g, 2);
    c = 2;
  }
  SolveOutcome out;
  if (!x) {
    out = decide_exact(g);
    out.stats["fallback_exact"] = 1;
  } else {
    DominatingOptions opt;
    opt.alpha_bound = c;
    out = solve_with_dominating_set(g, x->set, opt);
    out.stats["dominating_size"] = x->set.size();
    out.stats["rung_scan"] = x->rung == "scan";
    out.stats["rung_minimal_cds"] = x->rung == "minimal-cds";
    out.stats["rung_alpha_scan"] = x->rung == "alpha-scan";
    if (x->shape != DominatingShape::other) {
      const long long k1 = x->set.size() + 1;
      const long long emitted = out.stats["partitions2"] + out.stats["partitions3"];
      if (emitted > k1 * k1 * 4)
        throw InternalError("solve_p5_free emitted " + std::to_string(emitted) + " partitions for |X| = " +
                            std::to_string(x->set.size()));
    }
  }
  out.algorithm = "p5";
  out.parameter = "c=" + std::to_string(c);
  out.time_ms = clock.elapsed_ms();
  return out;
}

namespace {

bool hit_p5(const Graph& g, VertexSet& removed, int budget) {
  auto p = find_induced_p5(g, removed);
  if (!p) return true;
  if (budget == 0) return false;
  for (Vertex v : *p) {
    removed.insert(v);
    if (hit_p5(g, removed, budget - 1)) return true;
    removed.erase(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> p5_hitting_set(const Graph& g, int k) {
  for (int budget = 0; budget <= k; ++budget) {
    VertexSet removed = g.empty_set();
    if (!hit_p5(g, removed, budget)) continue;
    if (find_induced_p5(g, removed)) throw InternalError("p5_hitting_set left an induced P5");
    return removed;
  }
  return std::nullopt;
}

namespace {

// g[K ∪ X], optionally with one extra vertex standing in for the other components: it is adjacent
// to every vertex of X that has a neighbour outside K ∪ X.
struct LocalGraph {
  Graph graph;
  std::vector<Vertex> to_global;  // -1 for the stand-in
  std::vector<Vertex> to_local;
  Vertex stand_in = -1;

  VertexSet local(const VertexSet& global) const {
    VertexSet s(graph.vertex_count());
    for (Vertex v : global)
      if (to_local[static_cast<std::size_t>(v)] != -1) s.insert(to_local[static_cast<std::size_t>(v)]);
    return s;
  }
  VertexSet global(const VertexSet& local_set, int n) const {
    VertexSet s(n);
    for (Vertex v : local_set)
      if (to_global[static_cast<std::size_t>(v)] != -1) s.insert(to_global[static_cast<std::size_t>(v)]);
    return s;
  }
};

LocalGraph make_local(const Graph& g, const VertexSet& k, const VertexSet& x, bool with_stand_in) {
  const VertexSet keep = k | x;
  VertexSet attach = g.empty_set();
  for (Vertex v : x)
    if (!g.neighbors(v).is_subset_of(keep)) attach.insert(v);
  with_stand_in = with_stand_in && !attach.empty();
  LocalGraph lg;
  lg.to_local.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : keep) {
    lg.to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(lg.to_global.size());
    lg.to_global.push_back(v);
  }
  const int m = static_cast<int>(lg.to_global.size()) + (with_stand_in ? 1 : 0);
  lg.graph = Graph(m);
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      lg.graph.add_edge(lg.to_local[static_cast<std::size_t>(u)], lg.to_local[static_cast<std::size_t>(v)]);
  if (with_stand_in) {
    lg.stand_in = m - 1;
    lg.to_global.push_back(-1);
    for (Vertex v : attach) lg.graph.add_edge(lg.stand_in, lg.to_local[static_cast<std::size_t>(v)]);
  }
  return lg;
}

void merge(Stats& into, const Stats& from) {
  for (const auto& [key, value] : from) into[key] += value;
}

}  // namespace

SolveOutcome solve_by_deletion_set(const Graph& g, const VertexSet& x, const ComponentDominator& dominator) {
  Stopwatch clock;
  require_connected(g, "solve_by_deletion_set");
  const int n = g.vertex_count();
  SolveOutcome out;
  out.algorithm = "deletion-set";
  out.parameter = "k=" + std::to_string(x.size());

  const std::vector<VertexSet> comps = components(g, x);
  std::vector<VertexSet> doms;
  for (const auto& k : comps) {
    Subgraph sub = induced_subgraph(g, k);
    auto d = dominator(sub.graph);
    if (d) {
      doms.push_back(sub.lift(d->set));
      ++out.stats["rung_" + d->rung];
    } else {
      doms.push_back(k);
      ++out.stats["components_degraded"];
    }
  }
  out.stats["components"] = static_cast<long long>(comps.size());

  auto finish = [&](const VertexSet& witness, const char* phase) {
    out.stats[phase] = 1;
    accept_witness(out, g, witness);
    out.time_ms = clock.elapsed_ms();
    return out;
  };

  // Case 1: X \ S* meets at most one component of G - S*.
  std::optional<VertexSet> found;
  for_each_independent_subset(g, x, [&](const VertexSet& x_star) {
    ++out.stats["case1_guesses"];
    const VertexSet a_star = x - x_star;
    for (std::size_t i = 0; i < comps.size() && !found; ++i) {
      LocalGraph lg = make_local(g, comps[i], x, comps.size() > 1);
      DominatingOptions opt;
      opt.filter = PartitionFilter::none(lg.graph.vertex_count());
      opt.filter.a = lg.local(a_star);
      if (lg.stand_in != -1) opt.filter.a.insert(lg.stand_in);
      opt.filter.xp = lg.local(x_star);
      opt.accept = [&](const VertexSet& s) {
        if (lg.stand_in != -1 && s.contains(lg.stand_in)) return false;
        return is_independent_cutset(g, lg.global(s, n));
      };
      VertexSet dom = lg.local(doms[i] | x);
      if (lg.stand_in != -1) dom.insert(lg.stand_in);
      Stats local_stats;
      std::optional<VertexSet> s = precheck_subsets(lg.graph, dom, opt, local_stats);
      if (!s) s = no_split_case(lg.graph, dom, opt, local_stats);
      if (!s) s = split_case(lg.graph, dom, opt, local_stats);
      merge(out.stats, local_stats);
      if (s) found = lg.global(*s, n);
    }
    return !found;
  });
  if (found) return finish(*found, "phase_case1");

  // Case 2: X \ S* meets two components; A* and B* land on different sides.
  for_each_partition3(g, x, [&](const Partition3& p) {
    ++out.stats["case2_guesses"];
    VertexSet united = p.xp;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      LocalGraph lg = make_local(g, comps[i], x, false);
      const VertexSet a_local = lg.local(p.a), b_local = lg.local(p.b), x_local = lg.local(p.xp);
      DominatingOptions opt;
      opt.filter = {a_local, b_local, x_local};
      opt.accept = [&](const VertexSet& s) {
        return x_local.is_subset_of(s) && separates(lg.graph, s, a_local, b_local);
      };
      Stats local_stats;
      auto s = split_case(lg.graph, lg.local(doms[i] | x), opt, local_stats);
      merge(out.stats, local_stats);
      if (!s) return true;
      united |= lg.global(*s, n);
    }
    if (!is_independent(g, united)) throw InternalError("case 2 union is not independent");
    if (!p.xp.is_subset_of(united)) throw InternalError("case 2 union lost X*");
    if (!separates(g, united, p.a, p.b)) throw InternalError("case 2 union does not separate A* and B*");
    found = united;
    return false;
  });
  if (found) return finish(*found, "phase_case2");
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_by_p5_hitting(const Graph& g, int k) {
  Stopwatch clock;
  require_connected(g, "solve_by_p5_hitting");
  auto x = p5_hitting_set(g, k);
  if (!x) throw ParameterTooSmall("no P5-hitting set of size <= " + std::to_string(k));
  SolveOutcome out = solve_by_deletion_set(g, *x, [](const Graph& comp) {
    auto d = find_clique_or_p3_dominating(comp);
    return d ? d : find_alpha_dominating(comp, 2);
  });
  out.algorithm = "p5-hitting";
  out.parameter = "k=" + std::to_string(x->size());
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_alpha_dominated(const Graph& g, const VertexSet& x, int c) {
  Stopwatch clock;
  if (c < 0) throw ContractViolation("alpha bound must be non-negative");
  if (auto big = independent_subset_of_size(g, x, c + 1))
    throw ContractViolation("alpha(G[X]) exceeds " + std::to_string(c) + ": independent set " + format_vertices(g, *big));
  DominatingOptions opt;
  opt.alpha_bound = c;
  SolveOutcome out = solve_with_dominating_set(g, x, opt);
  out.algorithm = "alpha";
  out.parameter = "c=" + std::to_string(c) + ",k=" + std::to_string(x.size());
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_tk2_free(const Graph& g, int t) {
  Stopwatch clock;
  require_connected(g, "solve_tk2_free");
  if (t < 1) throw ContractViolation("t must be at least 1");
  if (auto m = find_induced_matching(g, t)) {
    std::string edges;
    for (std::size_t i = 0; i + 1 < m->size(); i += 2)
      edges += (edges.empty() ? "" : ", ") + std::to_string(g.label((*m)[i])) + "-" + std::to_string(g.label((*m)[i + 1]));
    throw ContractViolation("graph has an induced " + std::to_string(t) + "K2: " + edges);
  }
  SolveOutcome out = t == 2 ? decide_2k2_free(g) : decide_exact(g);
  if (t != 2) {
    const long double guard = std::pow(static_cast<long double>(g.vertex_count()), 2.0L * t);
    out.stats["mis_guard_exceeded"] = static_cast<long double>(out.stats["mis_examined"]) > guard;
  }
  out.algorithm = "tk2";
  out.parameter = "t=" + std::to_string(t);
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_by_alpha_deletion(const Graph& g, const VertexSet& x, int c) {
  Stopwatch clock;
  if (c < 1) throw ContractViolation("alpha bound must be at least 1");
  SolveOutcome out = solve_by_deletion_set(g, x, [c](const Graph& comp) { return find_alpha_dominating(comp, c); });
  out.algorithm = "alpha-deletion";
  out.parameter = "c=" + std::to_string(c) + ",k=" + std::to_string(x.size());
  out.time_ms = clock.elapsed_ms();
  return out;
}

}  // namespace indcut
