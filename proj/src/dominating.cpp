#include "indcut/dominating.hpp"

#include "indcut/errors.hpp"
#include "indcut/sat2.hpp"

namespace indcut {
namespace {

PartitionFilter effective_filter(const Graph& g, const DominatingOptions& opt) {
  return opt.filter.a.universe() == g.vertex_count() ? opt.filter : PartitionFilter::none(g.vertex_count());
}

bool accepted(const Graph& g, const DominatingOptions& opt, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return opt.accept ? opt.accept(s) : is_cutset(g, s);
}

bool full_or_bounded2(const Graph& g, const VertexSet& x, const DominatingOptions& opt, const PartitionFilter& f,
                      const std::function<bool(const Partition2&)>& visit) {
  if (opt.alpha_bound < 0) return for_each_partition2(g, x, f, visit);
  return for_each_bounded_alpha_partition(g, x, opt.alpha_bound, f, {visit, nullptr});
}

bool full_or_bounded3(const Graph& g, const VertexSet& x, const DominatingOptions& opt, const PartitionFilter& f,
                      const std::function<bool(const Partition3&)>& visit) {
  if (opt.alpha_bound < 0) return for_each_partition3(g, x, f, visit);
  return for_each_bounded_alpha_partition(g, x, opt.alpha_bound, f, {nullptr, visit});
}

std::optional<VertexSet> no_split_partition(const Graph& g, const Partition2& p, const DominatingOptions& opt,
                                            Stats& stats) {
  const VertexSet f = g.neighbors(p.xp) - p.a;
  const VertexSet i = g.neighbors(p.a) - p.xp - f;
  const VertexSet removed = p.xp | i;
  VertexSet reached = g.empty_set();
  for (const auto& comp : components(g, removed))
    if (comp.intersects(p.a)) reached |= comp;
  const VertexSet b = g.vertices() - removed - reached;
  if (!b.is_subset_of(f))
    throw InternalError("no_split_case: B = " + format_vertices(g, b) + " is not inside F = " + format_vertices(g, f));
  for (const auto& k : components(g, g.vertices() - b)) {
    ++stats["candidates"];
    VertexSet candidate = p.xp | (g.neighbors(k) & i);
    if (accepted(g, opt, candidate)) return candidate;
  }
  return std::nullopt;
}

std::optional<VertexSet> split_partition(const Graph& g, const VertexSet& x, const Partition3& p,
                                         const DominatingOptions& opt, Stats& stats) {
  auto state = propagate_split(g, x, p, opt.propagation);
  if (!state) {
    ++stats["bailouts"];
    return std::nullopt;
  }
  const VertexSet& forced = state->forced;
  const VertexSet& forbidden = state->forbidden;

  std::vector<VertexSet> classes = components(g, g.vertices() - p.a);
  for (auto& comp : components(g, g.vertices() - p.b)) classes.push_back(std::move(comp));
  auto [contracted, map] = contract(g, classes);
  for (const auto& [ka, kb] : state->bridges)
    for (Vertex u : ka)
      for (Vertex w : kb) {
        Vertex cu = map.forward[static_cast<std::size_t>(u)];
        Vertex cw = map.forward[static_cast<std::size_t>(w)];
        if (cu != cw) contracted.add_edge(cu, cw);
      }
  VertexSet keep = contracted.vertices();
  for (Vertex v : forced | forbidden) keep.erase(map.forward[static_cast<std::size_t>(v)]);
  Subgraph reduced = induced_subgraph(contracted, keep);
  VertexSet a_super(contracted.vertex_count()), b_super(contracted.vertex_count());
  for (Vertex v : p.a) a_super.insert(map.forward[static_cast<std::size_t>(v)]);
  for (Vertex v : p.b) b_super.insert(map.forward[static_cast<std::size_t>(v)]);

  SeparationContext ctx;
  try {
    ctx = make_separation_context(reduced.graph, reduced.project(a_super), reduced.project(b_super));
  } catch (const ContractViolation& e) {
    throw InternalError(std::string("split_case: reduced graph breaks the 2-SAT preconditions: ") + e.what());
  }
  ++stats["sat_calls"];
  auto assignment = solve_2sat(build_separation_formula(ctx));
  if (!assignment) return std::nullopt;
  VertexSet picked = reduced.lift(extract_cutset(ctx, *assignment));
  VertexSet witness = forced;
  for (Vertex c : picked) witness |= map.inverse[static_cast<std::size_t>(c)];
  if (!separates(g, witness, p.a, p.b) || !accepted(g, opt, witness)) {
    ++stats["rejected"];
    return std::nullopt;
  }
  return witness;
}

}  // namespace

std::optional<SplitState> propagate_split(const Graph& g, const VertexSet& x, const Partition3& p, Propagation mode) {
  const bool closed = mode == Propagation::closed;
  SplitState st{p, g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set(), {}, {}};
  const VertexSet near_a = g.neighbors(p.a);
  const VertexSet near_b = g.neighbors(p.b);
  st.n = near_a & near_b;
  st.na = near_a - st.n;
  st.nb = near_b - st.n;
  const VertexSet sides = st.na | st.nb;
  st.forced = p.xp | st.n;
  st.forbidden = g.neighbors(st.forced) - x;
  st.outer = st.forbidden - sides;

  auto h_neighbors = [&](Vertex u) { return g.neighbors(u) & (st.na.contains(u) ? st.nb : st.na); };
  st.links.assign(static_cast<std::size_t>(g.vertex_count()), g.empty_set());
  for (Vertex u : sides) st.links[static_cast<std::size_t>(u)] = h_neighbors(u);
  for (const auto& k : components(g, g.vertices() - st.outer)) {
    const VertexSet around = g.neighbors(k);
    st.bridges.emplace_back(around & st.na, around & st.nb);
    if (!closed) continue;
    for (Vertex u : st.bridges.back().first) st.links[static_cast<std::size_t>(u)] |= st.bridges.back().second;
    for (Vertex w : st.bridges.back().second) st.links[static_cast<std::size_t>(w)] |= st.bridges.back().first;
  }

  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex u : st.forbidden & sides) {
      for (Vertex v : st.links[static_cast<std::size_t>(u)] - st.forbidden - st.forced) {
        st.forced.insert(v);
        st.forbidden |= closed ? g.neighbors(v) - x : h_neighbors(v);
        grew = true;
      }
    }
  }
  if (!is_independent(g, st.forced) || st.forced.intersects(st.forbidden)) return std::nullopt;
  for (Vertex u : st.forbidden & sides)
    if (st.links[static_cast<std::size_t>(u)].intersects(st.forbidden)) return std::nullopt;
  return st;
}

std::optional<VertexSet> precheck_subsets(const Graph& g, const VertexSet& x, const DominatingOptions& opt,
                                          Stats& stats) {
  const PartitionFilter f = effective_filter(g, opt);
  std::optional<VertexSet> found;
  for_each_independent_subset(g, x - f.a - f.b, [&](const VertexSet& s) {
    if (!f.xp.is_subset_of(s)) return true;
    ++stats["subsets_checked"];
    if (!accepted(g, opt, s)) return true;
    found = s;
    return false;
  });
  return found;
}

std::optional<VertexSet> no_split_case(const Graph& g, const VertexSet& x, const DominatingOptions& opt, Stats& stats) {
  const PartitionFilter f = effective_filter(g, opt);
  std::optional<VertexSet> found;
  full_or_bounded2(g, x, opt, f, [&](const Partition2& p) {
    ++stats["partitions2"];
    found = no_split_partition(g, p, opt, stats);
    return !found;
  });
  return found;
}

std::optional<VertexSet> split_case(const Graph& g, const VertexSet& x, const DominatingOptions& opt, Stats& stats) {
  const PartitionFilter f = effective_filter(g, opt);
  std::optional<VertexSet> found;
  full_or_bounded3(g, x, opt, f, [&](const Partition3& p) {
    ++stats["partitions3"];
    found = split_partition(g, x, p, opt, stats);
    return !found;
  });
  return found;
}

SolveOutcome solve_with_dominating_set(const Graph& g, const VertexSet& x, const DominatingOptions& opt) {
  Stopwatch clock;
  SolveOutcome out;
  out.algorithm = "dominating";
  out.parameter = "k=" + std::to_string(x.size());
  require_connected(g, "solve_with_dominating_set");
  if (Vertex v = undominated_vertex(g, x); v != -1)
    throw ContractViolation("dominating set misses vertex " + std::to_string(g.label(v)));

  std::optional<VertexSet> found;
  if ((found = precheck_subsets(g, x, opt, out.stats))) {
    out.stats["phase_precheck"] = 1;
  } else if ((found = no_split_case(g, x, opt, out.stats))) {
    out.stats["phase_no_split"] = 1;
  } else if ((found = split_case(g, x, opt, out.stats))) {
    out.stats["phase_split"] = 1;
  }
  if (found) {
    if (opt.accept) {
      out.answer = Answer::yes;
      out.witness = found;
    } else {
      accept_witness(out, g, *found);
    }
  }
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_by_independence_number(const Graph& g) {
  require_connected(g, "solve_by_independence_number");
  std::optional<VertexSet> x;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    x = s;
    return false;
  });
  SolveOutcome out = solve_with_dominating_set(g, *x);
  out.algorithm = "independence-number";
  return out;
}

namespace {

bool hit_triangles(const Graph& g, VertexSet& chosen, int budget) {
  auto t = find_triangle(g, chosen);
  if (!t) return true;
  if (budget == 0) return false;
  for (Vertex v : *t) {
    chosen.insert(v);
    if (hit_triangles(g, chosen, budget - 1)) return true;
    chosen.erase(v);
  }
  return false;
}

// N(v) for a vertex in no triangle, or a definite "no" for the star-like leftovers.
std::optional<SolveOutcome> triangle_free_vertex(const Graph& g, const std::string& algorithm) {
  bool some_free = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    if (!is_independent(g, nv)) continue;
    some_free = true;
    if (!is_cutset(g, nv)) continue;
    SolveOutcome out;
    out.algorithm = algorithm;
    out.stats["phase_fastpath"] = 1;
    accept_witness(out, g, nv);
    return out;
  }
  if (!some_free) return std::nullopt;
  // A vertex v in no triangle with N(v) not a cutset has V = N[v] and N(v) independent: a star.
  // Every star with two leaves is caught above through a leaf, so what remains is K1 or K2.
  SolveOutcome out;
  out.algorithm = algorithm;
  out.stats["phase_fastpath"] = 1;
  return out;
}

}  // namespace

std::optional<VertexSet> triangle_hitting_set(const Graph& g, int k) {
  for (int budget = 0; budget <= k; ++budget) {
    VertexSet chosen = g.empty_set();
    if (hit_triangles(g, chosen, budget)) return chosen;
  }
  return std::nullopt;
}

SolveOutcome solve_by_triangle_hitting(const Graph& g, int k) {
  Stopwatch clock;
  require_connected(g, "solve_by_triangle_hitting");
  if (auto fast = triangle_free_vertex(g, "triangle")) {
    fast->parameter = "k=" + std::to_string(k);
    fast->time_ms = clock.elapsed_ms();
    return *fast;
  }
  auto x = triangle_hitting_set(g, k);
  if (!x) throw ParameterTooSmall("no triangle-hitting set of size <= " + std::to_string(k));
  if (undominated_vertex(g, *x) != -1) throw InternalError("triangle-hitting set does not dominate");
  SolveOutcome out = solve_with_dominating_set(g, *x);
  out.algorithm = "triangle";
  out.parameter = "k=" + std::to_string(x->size());
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_by_oct(const Graph& g, const VertexSet& oct) {
  Stopwatch clock;
  require_connected(g, "solve_by_oct");
  auto cycle = find_odd_cycle(g, oct);
  if (!cycle.empty()) {
    VertexSet c = g.empty_set();
    for (Vertex v : cycle) c.insert(v);
    throw ContractViolation("g - oct is not bipartite: odd cycle through " + format_vertices(g, c));
  }
  if (auto fast = triangle_free_vertex(g, "oct")) {
    fast->parameter = "k=" + std::to_string(oct.size());
    fast->time_ms = clock.elapsed_ms();
    return *fast;
  }
  if (undominated_vertex(g, oct) != -1) throw InternalError("odd cycle transversal does not dominate");
  SolveOutcome out = solve_with_dominating_set(g, oct);
  out.algorithm = "oct";
  out.time_ms = clock.elapsed_ms();
  return out;
}

}  // namespace indcut
