#include "indcut/sat2.hpp"

#include <algorithm>
#include <sstream>

#include "indcut/errors.hpp"

namespace indcut {
namespace {

int node(Literal x) { return 2 * x.var + (x.positive ? 0 : 1); }

// Iterative Tarjan. Component ids come out in reverse topological order of the condensation.
std::vector<int> strong_components(const std::vector<std::vector<int>>& adj, const std::vector<int>& roots) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  int comps = 0;
  for (int root : roots) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, 0);
        } else if (comp[w] == -1) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

void TwoSatFormula::add_clause(Literal x, Literal y) {
  if (x.var < 0 || x.var >= var_count_ || y.var < 0 || y.var >= var_count_)
    throw ContractViolation("2-SAT clause refers to a variable outside 0.." + std::to_string(var_count_ - 1));
  clauses_.push_back({x, y});
}

bool TwoSatFormula::satisfied_by(const std::vector<bool>& assignment) const {
  auto holds = [&](Literal x) { return assignment[static_cast<std::size_t>(x.var)] == x.positive; };
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) { return holds(c.a) || holds(c.b); });
}

std::string TwoSatFormula::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << var_count_ << ' ' << clauses_.size() << '\n';
  auto lit = [](Literal x) { return (x.positive ? 1 : -1) * (x.var + 1); };
  for (const auto& c : clauses_) {
    if (c.a == c.b)
      out << lit(c.a) << " 0\n";
    else
      out << lit(c.a) << ' ' << lit(c.b) << " 0\n";
  }
  return out.str();
}

std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f) {
  const int r = f.var_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * r));
  for (const auto& c : f.clauses()) {
    adj[static_cast<std::size_t>(node(!c.a))].push_back(node(c.b));
    adj[static_cast<std::size_t>(node(!c.b))].push_back(node(c.a));
  }
  // Negative literals are visited first so that unconstrained variables end up false.
  std::vector<int> roots;
  for (int v = 0; v < r; ++v) {
    roots.push_back(2 * v + 1);
    roots.push_back(2 * v);
  }
  auto comp = strong_components(adj, roots);
  std::vector<bool> assignment(static_cast<std::size_t>(r));
  for (int v = 0; v < r; ++v) {
    int pos = comp[static_cast<std::size_t>(2 * v)];
    int neg = comp[static_cast<std::size_t>(2 * v + 1)];
    if (pos == neg) return std::nullopt;
    assignment[static_cast<std::size_t>(v)] = pos < neg;
  }
  return assignment;
}

SeparationContext make_separation_context(Graph gp, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw ContractViolation("separation context: A and B must be nonempty");
  if (a.intersects(b) || !is_independent(gp, a | b))
    throw ContractViolation("separation context: A ∪ B is not independent");
  SeparationContext ctx{std::move(gp), a, b, {}, {}, {}};
  const Graph& g = ctx.gp;
  ctx.na = g.neighbors(a);
  ctx.nb = g.neighbors(b);
  if (ctx.na.intersects(ctx.nb))
    throw ContractViolation("separation context: N(A) and N(B) share " + format_vertices(g, ctx.na & ctx.nb));
  VertexSet stray = g.vertices() - a - b - ctx.na - ctx.nb;
  if (!stray.empty())
    throw ContractViolation("separation context: vertices outside A ∪ B ∪ N_A ∪ N_B: " + format_vertices(g, stray));

  VertexSet in_h = g.empty_set();
  for (Vertex u : ctx.na)
    if (g.neighbors(u).intersects(ctx.nb)) in_h.insert(u);
  for (Vertex w : ctx.nb)
    if (g.neighbors(w).intersects(ctx.na)) in_h.insert(w);
  VertexSet seen = g.empty_set();
  for (Vertex s : in_h) {
    if (seen.contains(s)) continue;
    VertexSet comp = g.empty_set().with(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.empty_set();
      for (Vertex u : frontier) next |= g.neighbors(u) & (ctx.na.contains(u) ? ctx.nb : ctx.na);
      frontier = next - comp;
      comp |= frontier;
    }
    seen |= comp;
    ctx.components.push_back({comp & ctx.na, comp & ctx.nb});
  }
  return ctx;
}

TwoSatFormula build_separation_formula(const SeparationContext& ctx) {
  const Graph& g = ctx.gp;
  const int r = static_cast<int>(ctx.components.size());
  TwoSatFormula f(r);
  auto has_edge_between = [&](const VertexSet& x, const VertexSet& y) {
    for (Vertex u : x)
      if (g.neighbors(u).intersects(y)) return true;
    return false;
  };
  for (int i = 0; i < r; ++i) {
    const auto& ci = ctx.components[static_cast<std::size_t>(i)];
    if (!is_independent(g, ci.na)) f.add_unit({i, true});
    if (!is_independent(g, ci.nb)) f.add_unit({i, false});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const auto& ci = ctx.components[static_cast<std::size_t>(i)];
      const auto& cj = ctx.components[static_cast<std::size_t>(j)];
      if (has_edge_between(ci.na, cj.na)) f.add_clause({i, true}, {j, true});
      if (has_edge_between(ci.nb, cj.nb)) f.add_clause({i, false}, {j, false});
    }
  return f;
}

VertexSet extract_cutset(const SeparationContext& ctx, const std::vector<bool>& assignment) {
  if (assignment.size() != ctx.components.size())
    throw ContractViolation("extract_cutset: assignment length does not match the variable count");
  VertexSet s = ctx.gp.empty_set();
  for (std::size_t i = 0; i < assignment.size(); ++i) s |= assignment[i] ? ctx.components[i].nb : ctx.components[i].na;
  if (!is_independent(ctx.gp, s)) throw InternalError("extract_cutset: " + format_vertices(ctx.gp, s) + " is not independent");
  if (!separates(ctx.gp, s, ctx.a, ctx.b))
    throw InternalError("extract_cutset: " + format_vertices(ctx.gp, s) + " does not separate A and B");
  return s;
}

}  // namespace indcut
