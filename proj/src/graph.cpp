#include "indcut/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "indcut/errors.hpp"

namespace indcut {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)), labels_(static_cast<std::size_t>(n)) {
  std::iota(labels_.begin(), labels_.end(), std::uint64_t{0});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ContractViolation("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (!g.add_edge(u, v))
      throw ContractViolation("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
  return true;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adj_[u].contains(v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --m_;
}

VertexSet Graph::neighbors(const VertexSet& s) const { return closed_neighbors(s) - s; }

VertexSet Graph::closed_neighbors(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::uint64_t> labels) {
  if (static_cast<int>(labels.size()) != n_) throw ContractViolation("label count does not match vertex count");
  labels_ = std::move(labels);
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  VertexSet out(parent_order);
  for (Vertex v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

VertexSet Subgraph::project(const VertexSet& parent_set) const {
  VertexSet out(graph.vertex_count());
  for (Vertex v : parent_set) {
    Vertex local = from_parent[static_cast<std::size_t>(v)];
    if (local != -1) out.insert(local);
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Subgraph sub;
  sub.parent_order = g.vertex_count();
  sub.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : keep) {
    sub.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  const int n = static_cast<int>(sub.to_parent.size());
  sub.graph = Graph(n);
  std::vector<std::uint64_t> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    Vertex u = sub.to_parent[static_cast<std::size_t>(i)];
    labels.push_back(g.label(u));
    for (Vertex w : g.neighbors(u) & keep) {
      Vertex j = sub.from_parent[static_cast<std::size_t>(w)];
      if (j > i) sub.graph.add_edge(i, j);
    }
  }
  sub.graph.set_labels(std::move(labels));
  return sub;
}

VertexSet component_of(const Graph& g, const VertexSet& removed, Vertex start) {
  VertexSet seen(g.vertex_count());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.vertex_count());
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= removed;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices() - removed;
  for (Vertex v = left.first(); v != -1; v = left.first()) {
    VertexSet comp = component_of(g, removed, v);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return component_of(g, g.empty_set(), 0).size() == g.vertex_count();
}

void require_connected(const Graph& g, const std::string& who) {
  if (!is_connected(g)) throw ContractViolation(who + ": input graph is disconnected");
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_cutset(const Graph& g, const VertexSet& s) {
  require_connected(g, "is_cutset");
  VertexSet rest = g.vertices() - s;
  Vertex v = rest.first();
  if (v == -1) return false;
  return component_of(g, s, v).size() < rest.size();
}

bool is_independent_cutset(const Graph& g, const VertexSet& s) { return is_independent(g, s) && is_cutset(g, s); }

bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  VertexSet a_left = a - s;
  VertexSet b_left = b - s;
  if (a_left.empty() || b_left.empty()) return true;
  VertexSet reach = g.empty_set();
  for (Vertex v : a_left) {
    if (reach.contains(v)) continue;
    reach |= component_of(g, s, v);
  }
  return !reach.intersects(b_left);
}

Vertex undominated_vertex(const Graph& g, const VertexSet& x) { return (g.vertices() - g.closed_neighbors(x)).first(); }

bool is_dominating(const Graph& g, const VertexSet& x) { return undominated_vertex(g, x) == -1; }

VertexSet ContractionMap::expand(const VertexSet& contracted) const {
  VertexSet out(static_cast<int>(forward.size()));
  for (Vertex c : contracted) out |= inverse[static_cast<std::size_t>(c)];
  return out;
}

std::pair<Graph, ContractionMap> contract(const Graph& g, std::span<const VertexSet> classes) {
  const int n = g.vertex_count();
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c]) {
      if (class_of[static_cast<std::size_t>(v)] != -1)
        throw ContractViolation("contract: classes overlap at vertex " + std::to_string(v));
      class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }

  ContractionMap map;
  map.forward.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> labels;
  for (Vertex v = 0; v < n; ++v) {
    if (map.forward[static_cast<std::size_t>(v)] != -1) continue;
    const Vertex id = static_cast<Vertex>(map.inverse.size());
    VertexSet members(n);
    if (int c = class_of[static_cast<std::size_t>(v)]; c != -1)
      members = classes[static_cast<std::size_t>(c)];
    else
      members.insert(v);
    for (Vertex u : members) map.forward[static_cast<std::size_t>(u)] = id;
    map.inverse.push_back(std::move(members));
    labels.push_back(g.label(v));
  }

  Graph out(static_cast<int>(map.inverse.size()));
  for (auto [u, v] : g.edges()) {
    Vertex a = map.forward[static_cast<std::size_t>(u)];
    Vertex b = map.forward[static_cast<std::size_t>(v)];
    if (a != b) out.add_edge(a, b);
  }
  out.set_labels(std::move(labels));
  return {std::move(out), std::move(map)};
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph out(na + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + na, v + na);
  return out;
}

std::vector<Vertex> find_odd_cycle(const Graph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (removed.contains(root) || colour[static_cast<std::size_t>(root)] != -1) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u) - removed) {
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (colour[wi] == -1) {
          colour[wi] = 1 - colour[ui];
          parent[wi] = u;
          depth[wi] = depth[ui] + 1;
          queue.push_back(w);
        } else if (colour[wi] == colour[ui]) {
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

std::string format_vertices(const Graph& g, const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << g.label(v);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace indcut
