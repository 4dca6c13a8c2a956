#include "indcut/treewidth.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <deque>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"

namespace indcut {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, bag.size() - 1);
  return w;
}

int TreeDecomposition::add_node(VertexSet bag, int parent_node) {
  const int id = size();
  bags.push_back(std::move(bag));
  parent.push_back(parent_node);
  children.emplace_back();
  if (parent_node >= 0) children[static_cast<std::size_t>(parent_node)].push_back(id);
  return id;
}

namespace {

std::string label_of(const Graph& g, Vertex v) { return std::to_string(g.label(v)); }

void fail(const std::string& what) { throw ContractViolation("tree decomposition: " + what); }

}  // namespace

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int nodes = td.size();
  if (nodes == 0) fail("no nodes");
  if (static_cast<int>(td.parent.size()) != nodes || static_cast<int>(td.children.size()) != nodes)
    fail("parent/children arrays do not match the bag count");
  if (td.root < 0 || td.root >= nodes || td.parent[static_cast<std::size_t>(td.root)] != -1)
    fail("root is missing or has a parent");
  for (int t = 0; t < nodes; ++t) {
    if (td.bags[static_cast<std::size_t>(t)].universe() != g.vertex_count())
      fail("bag of node " + std::to_string(t) + " has the wrong universe");
    for (int c : td.children[static_cast<std::size_t>(t)])
      if (c < 0 || c >= nodes || td.parent[static_cast<std::size_t>(c)] != t)
        fail("child list of node " + std::to_string(t) + " disagrees with the parent array");
  }
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  std::vector<int> stack{td.root};
  int reached = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(t)]) fail("node " + std::to_string(t) + " is reached twice");
    seen[static_cast<std::size_t>(t)] = 1;
    ++reached;
    for (int c : td.children[static_cast<std::size_t>(t)]) stack.push_back(c);
  }
  if (reached != nodes) fail("the tree does not reach every node from the root");

  VertexSet covered = g.empty_set();
  for (const auto& bag : td.bags) covered |= bag;
  if (covered != g.vertices())
    fail("(T1) vertex " + label_of(g, (g.vertices() - covered).first()) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : td.bags) found = found || (bag.contains(u) && bag.contains(v));
    if (!found) fail("(T2) edge " + label_of(g, u) + "-" + label_of(g, v) + " is in no bag");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int tops = 0;
    for (int t = 0; t < nodes; ++t) {
      if (!td.bags[static_cast<std::size_t>(t)].contains(v)) continue;
      int p = td.parent[static_cast<std::size_t>(t)];
      if (p < 0 || !td.bags[static_cast<std::size_t>(p)].contains(v)) ++tops;
    }
    if (tops != 1) fail("(T3) the nodes containing vertex " + label_of(g, v) + " are not connected");
  }
}

void validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  const TreeDecomposition& td = ntd.td;
  validate_decomposition(g, td);
  const auto nodes = static_cast<std::size_t>(td.size());
  if (ntd.kind.size() != nodes || ntd.vertex.size() != nodes) fail("node kinds do not match the bag count");
  if (!td.bags[static_cast<std::size_t>(td.root)].empty()) fail("root bag is not empty");
  for (std::size_t t = 0; t < nodes; ++t) {
    const auto& kids = td.children[t];
    const VertexSet& bag = td.bags[t];
    const std::string name = "node " + std::to_string(t);
    switch (ntd.kind[t]) {
      case NodeKind::leaf:
        if (!kids.empty() || !bag.empty()) fail(name + ": a leaf needs an empty bag and no children");
        break;
      case NodeKind::introduce: {
        if (kids.size() != 1) fail(name + ": introduce needs one child");
        const VertexSet& below = td.bags[static_cast<std::size_t>(kids[0])];
        Vertex v = ntd.vertex[t];
        if (v < 0 || below.contains(v) || bag != below.with(v)) fail(name + ": introduce bag relation broken");
        break;
      }
      case NodeKind::forget: {
        if (kids.size() != 1) fail(name + ": forget needs one child");
        const VertexSet& below = td.bags[static_cast<std::size_t>(kids[0])];
        Vertex w = ntd.vertex[t];
        if (w < 0 || !below.contains(w) || bag != below.without(w)) fail(name + ": forget bag relation broken");
        break;
      }
      case NodeKind::join:
        if (kids.size() != 2) fail(name + ": join needs two children");
        for (int c : kids)
          if (td.bags[static_cast<std::size_t>(c)] != bag) fail(name + ": join children must share its bag");
        break;
    }
  }
}

void validate_refined(const Graph& g, const RefinedNiceTreeDecomposition& rtd) {
  validate_nice(g, rtd.nice);
  const auto& bags = rtd.nice.td.bags;
  if (rtd.refined.size() != bags.size()) fail("refined sets do not match the bag count");
  for (std::size_t t = 0; t < bags.size(); ++t) {
    if (!rtd.refined[t].is_subset_of(bags[t])) fail("U_t of node " + std::to_string(t) + " leaves its bag");
    if (rtd.refined[t].size() > rtd.ell) fail("U_t of node " + std::to_string(t) + " exceeds ell");
  }
}

std::optional<std::vector<Vertex>> recognize_chordal(const Graph& g, std::vector<Vertex>* hole) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet numbered = g.empty_set();
  std::vector<Vertex> visit;
  for (int i = 0; i < n; ++i) {
    Vertex best = -1;
    for (Vertex v : g.vertices() - numbered)
      if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    numbered.insert(best);
    visit.push_back(best);
    for (Vertex u : g.neighbors(best) - numbered) ++weight[static_cast<std::size_t>(u)];
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;

  bool chordal = true;
  for (Vertex v : peo) {
    Vertex first = -1;
    VertexSet later = g.empty_set();
    for (Vertex u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)]) continue;
      later.insert(u);
      if (first == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)]) first = u;
    }
    if (first != -1 && !later.without(first).is_subset_of(g.neighbors(first))) {
      chordal = false;
      break;
    }
  }
  if (chordal) return peo;
  if (hole == nullptr) return std::nullopt;

  // A shortest x-y path avoiding N[v] \ {x, y} closes a chordless cycle through v.
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet& nv = g.neighbors(v);
    for (Vertex x : nv)
      for (Vertex y : nv) {
        if (y <= x || g.adjacent(x, y)) continue;
        const VertexSet allowed = (g.vertices() - g.closed_neighbors(v)) | VertexSet(n, {x, y});
        std::vector<Vertex> from(static_cast<std::size_t>(n), -1);
        from[static_cast<std::size_t>(x)] = x;
        std::deque<Vertex> queue{x};
        while (!queue.empty() && from[static_cast<std::size_t>(y)] == -1) {
          Vertex u = queue.front();
          queue.pop_front();
          for (Vertex w : g.neighbors(u) & allowed) {
            if (from[static_cast<std::size_t>(w)] != -1) continue;
            from[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
          }
        }
        if (from[static_cast<std::size_t>(y)] == -1) continue;
        hole->clear();
        hole->push_back(v);
        std::vector<Vertex> path;
        for (Vertex w = y; w != x; w = from[static_cast<std::size_t>(w)]) path.push_back(w);
        path.push_back(x);
        hole->insert(hole->end(), path.rbegin(), path.rend());
        return std::nullopt;
      }
  }
  throw InternalError("recognize_chordal: elimination check failed but no chordless cycle was found");
}

namespace {

std::string format_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  std::string s;
  for (Vertex v : cycle) s += (s.empty() ? "" : " ") + label_of(g, v);
  return s;
}

}  // namespace

TreeDecomposition clique_tree(const Graph& g) {
  std::vector<Vertex> hole;
  auto peo = recognize_chordal(g, &hole);
  if (!peo) throw ContractViolation("graph is not chordal: chordless cycle " + format_cycle(g, hole));
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>((*peo)[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> candidates;
  for (Vertex v : *peo) {
    VertexSet c = g.empty_set().with(v);
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) c.insert(u);
    candidates.push_back(std::move(c));
  }
  std::vector<VertexSet> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (i != j && candidates[i].is_subset_of(candidates[j])) maximal = false;
    if (maximal) cliques.push_back(candidates[i]);
  }
  std::sort(cliques.begin(), cliques.end());

  TreeDecomposition td;
  if (cliques.empty()) {
    td.root = td.add_node(g.empty_set(), -1);
    return td;
  }
  // Prim on intersection sizes; ties go to the smaller index.
  const std::size_t m = cliques.size();
  std::vector<int> key(m, -1), link(m, -1);
  std::vector<char> in_tree(m, 0);
  std::vector<int> order;
  key[0] = 0;
  for (std::size_t step = 0; step < m; ++step) {
    int best = -1;
    for (std::size_t i = 0; i < m; ++i)
      if (!in_tree[i] && (best == -1 || key[i] > key[static_cast<std::size_t>(best)])) best = static_cast<int>(i);
    in_tree[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (std::size_t i = 0; i < m; ++i) {
      if (in_tree[i]) continue;
      int w = cliques[i].intersection_size(cliques[static_cast<std::size_t>(best)]);
      if (w > key[i]) {
        key[i] = w;
        link[i] = best;
      }
    }
  }
  td.bags = cliques;
  td.parent.assign(m, -1);
  td.children.assign(m, {});
  for (int i : order) {
    td.parent[static_cast<std::size_t>(i)] = link[static_cast<std::size_t>(i)];
    if (link[static_cast<std::size_t>(i)] >= 0) td.children[static_cast<std::size_t>(link[static_cast<std::size_t>(i)])].push_back(i);
  }
  td.root = 0;
  return td;
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  validate_decomposition(g, td);
  NiceTreeDecomposition out;
  auto add = [&](VertexSet bag, NodeKind kind, Vertex v, std::initializer_list<int> kids) {
    int id = out.td.add_node(std::move(bag), -1);
    out.kind.push_back(kind);
    out.vertex.push_back(v);
    for (int c : kids) {
      out.td.parent[static_cast<std::size_t>(c)] = id;
      out.td.children[static_cast<std::size_t>(id)].push_back(c);
    }
    return id;
  };
  // Walks from `bottom` (with bag `from`) up to bag `to`: forgets first, then introduces.
  auto chain = [&](int bottom, VertexSet from, const VertexSet& to) {
    for (Vertex w : from - to) {
      from.erase(w);
      bottom = add(from, NodeKind::forget, w, {bottom});
    }
    for (Vertex v : to - from) {
      from.insert(v);
      bottom = add(from, NodeKind::introduce, v, {bottom});
    }
    return bottom;
  };

  std::vector<int> post;
  std::vector<std::pair<int, bool>> stack{{td.root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      post.push_back(t);
      continue;
    }
    stack.emplace_back(t, true);
    for (int c : td.children[static_cast<std::size_t>(t)]) stack.emplace_back(c, false);
  }

  std::vector<int> top(static_cast<std::size_t>(td.size()), -1);
  for (int t : post) {
    const VertexSet& bag = td.bags[static_cast<std::size_t>(t)];
    std::vector<int> kids = td.children[static_cast<std::size_t>(t)];
    std::stable_sort(kids.begin(), kids.end(), [&](int x, int y) {
      return td.bags[static_cast<std::size_t>(x)].first() < td.bags[static_cast<std::size_t>(y)].first();
    });
    if (kids.empty()) {
      top[static_cast<std::size_t>(t)] = chain(add(g.empty_set(), NodeKind::leaf, -1, {}), g.empty_set(), bag);
      continue;
    }
    int acc = -1;
    for (int c : kids) {
      int up = chain(top[static_cast<std::size_t>(c)], td.bags[static_cast<std::size_t>(c)], bag);
      acc = acc == -1 ? up : add(bag, NodeKind::join, -1, {acc, up});
    }
    top[static_cast<std::size_t>(t)] = acc;
  }
  out.td.root = chain(top[static_cast<std::size_t>(td.root)], td.bags[static_cast<std::size_t>(td.root)], g.empty_set());

  const long long w1 = std::max(td.width() + 1, 1);
  const long long limit = 5 * w1 * std::max(g.vertex_count(), td.size());
  if (out.td.size() > limit)
    throw InternalError("make_nice produced " + std::to_string(out.td.size()) + " nodes, above " + std::to_string(limit));
  try {
    validate_nice(g, out);
  } catch (const ContractViolation& e) {
    throw InternalError(std::string("make_nice: ") + e.what());
  }
  return out;
}

RefinedNiceTreeDecomposition refine_with_deletion_set(const Graph& g, const NiceTreeDecomposition& ntd,
                                                      const VertexSet& u) {
  RefinedNiceTreeDecomposition out;
  out.nice = ntd;
  for (const auto& bag : ntd.td.bags) {
    out.refined.push_back(bag & u);
    out.ell = std::max(out.ell, out.refined.back().size());
    out.residual_alpha = std::max(out.residual_alpha, independence_number(g, bag - u));
  }
  return out;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw ContractViolation("elimination order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw ContractViolation("elimination order must list every vertex once");
    pos[static_cast<std::size_t>(v)] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.root = td.add_node(g.empty_set(), -1);
    return td;
  }
  std::vector<VertexSet> filled;
  for (Vertex v = 0; v < n; ++v) filled.push_back(g.neighbors(v));
  VertexSet remaining = g.vertices();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    remaining.erase(v);
    const VertexSet later = filled[static_cast<std::size_t>(v)] & remaining;
    for (Vertex u : later) filled[static_cast<std::size_t>(u)] |= later.without(u);
    td.add_node(later.with(v), -1);
    int next = -1;
    for (Vertex u : later)
      if (next == -1 || pos[static_cast<std::size_t>(u)] < next) next = pos[static_cast<std::size_t>(u)];
    if (next == -1 && i + 1 < n) next = i + 1;
    parent[static_cast<std::size_t>(i)] = next;
  }
  for (int i = 0; i < n; ++i) {
    td.parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(i)];
    if (parent[static_cast<std::size_t>(i)] >= 0) td.children[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].push_back(i);
  }
  td.root = n - 1;
  return td;
}

TreeDecomposition optimal_tree_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw ContractViolation("optimal_tree_decomposition is limited to 20 vertices");
  if (n == 0) return decomposition_from_elimination_order(g, {});
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1U << u;
  // Vertices outside S ∪ {v} reachable from v through S.
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t visited = 1U << v, frontier = 1U << v;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~visited;
      visited |= next;
      frontier = next & s;
    }
    return std::popcount(visited & ~s & ~(1U << v));
  };
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<signed char> tw(std::size_t{1} << n, 0);
  std::vector<signed char> last(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 127;
    for (std::uint32_t r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      std::uint32_t rest = s & ~(1U << v);
      int value = std::max<int>(tw[rest], q(rest, v));
      if (value < best) {
        best = value;
        last[s] = static_cast<signed char>(v);
      }
    }
    tw[s] = static_cast<signed char>(best);
  }
  std::vector<Vertex> order;
  for (std::uint32_t s = full; s; s &= ~(1U << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  return decomposition_from_elimination_order(g, order);
}

namespace {

constexpr int kMaxBag = 62;

struct Key {
  std::uint64_t s, a, b;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.s * 0x9E3779B97F4A7C15ULL;
    h ^= k.a + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= k.b + 0xA0761D6478BD642FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Back-pointer tags. Introduce: kFromChild or kFresh. Forget: where w sat in the child key.
// Join: which children carry the entry.
enum Tag : std::uint8_t { kFresh = 0, kFromChild = 1, kInA = 0, kInB = 1, kInS = 2, kLeft = 1, kRight = 2, kBoth = 3 };

using Table = std::unordered_map<Key, std::uint8_t, KeyHash>;

std::uint64_t drop_bit(std::uint64_t m, int p) {
  const std::uint64_t low = m & ((std::uint64_t{1} << p) - 1);
  return ((m >> (p + 1)) << p) | low;
}

std::uint64_t open_bit(std::uint64_t m, int p) {
  const std::uint64_t low = m & ((std::uint64_t{1} << p) - 1);
  return ((m >> p) << (p + 1)) | low;
}

struct Evaluator {
  const Graph& g;
  const RefinedNiceTreeDecomposition& rtd;
  const TreeDecomposition& td;
  std::vector<std::vector<Vertex>> bag;
  std::vector<std::vector<std::uint64_t>> local_adj;
  std::vector<char> forgets_below;  // t or a descendant of t is a forget node
  std::vector<Table> tables;
  long long entries = 0;
  long long widest = 0;

  Evaluator(const Graph& graph, const RefinedNiceTreeDecomposition& r) : g(graph), rtd(r), td(r.nice.td) {
    const auto nodes = static_cast<std::size_t>(td.size());
    bag.resize(nodes);
    local_adj.resize(nodes);
    forgets_below.assign(nodes, 0);
    tables.resize(nodes);
    for (std::size_t t = 0; t < nodes; ++t) {
      bag[t] = td.bags[t].to_vector();
      if (bag[t].size() > static_cast<std::size_t>(kMaxBag))
        throw ContractViolation("dp_solve supports bags of at most " + std::to_string(kMaxBag) + " vertices");
      for (Vertex v : bag[t]) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < bag[t].size(); ++i)
          if (g.adjacent(v, bag[t][i])) mask |= std::uint64_t{1} << i;
        local_adj[t].push_back(mask);
      }
    }
  }

  int position(int t, Vertex v) const {
    const auto& b = bag[static_cast<std::size_t>(t)];
    return static_cast<int>(std::lower_bound(b.begin(), b.end(), v) - b.begin());
  }

  bool independent(int t, std::uint64_t s) const {
    for (std::uint64_t r = s; r; r &= r - 1)
      if (local_adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(std::countr_zero(r))] & s) return false;
    return true;
  }

  std::uint64_t full(int t) const {
    const auto k = bag[static_cast<std::size_t>(t)].size();
    return k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
  }

  void independent_masks(int t, std::uint64_t allowed, std::uint64_t chosen, const std::function<void(std::uint64_t)>& f) const {
    if (allowed == 0) {
      f(chosen);
      return;
    }
    const int i = std::countr_zero(allowed);
    const std::uint64_t bit = std::uint64_t{1} << i;
    independent_masks(t, allowed & ~bit, chosen, f);
    independent_masks(t, allowed & ~bit & ~local_adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)], chosen | bit, f);
  }

  void introduce(int t, int c, Vertex v) {
    Table& out = tables[static_cast<std::size_t>(t)];
    const int p = position(t, v);
    const std::uint64_t bit = std::uint64_t{1} << p;
    const std::uint64_t nb = local_adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
    for (const auto& [key, tag] : tables[static_cast<std::size_t>(c)]) {
      const std::uint64_t s = open_bit(key.s, p), a = open_bit(key.a, p), b = open_bit(key.b, p);
      if ((nb & s) == 0) out.emplace(Key{s | bit, a, b}, kFromChild);
      if ((nb & b) == 0) out.emplace(Key{s, a | bit, b}, kFromChild);
      if ((nb & a) == 0) out.emplace(Key{s, a, b | bit}, kFromChild);
    }
    // v alone on one side, everything else of V_t' \ S' on the other.
    const bool below = forgets_below[static_cast<std::size_t>(c)];
    independent_masks(c, full(c), 0, [&](std::uint64_t child_s) {
      const std::uint64_t s = open_bit(child_s, p);
      const std::uint64_t rest = open_bit(full(c) & ~child_s, p);
      if (rest != 0 ? (nb & rest) == 0 : below) {
        out.emplace(Key{s, bit, rest}, kFresh);
        out.emplace(Key{s, rest, bit}, kFresh);
      }
    });
  }

  void forget(int t, int c, Vertex w) {
    Table& out = tables[static_cast<std::size_t>(t)];
    const int p = position(c, w);
    const std::uint64_t bit = std::uint64_t{1} << p;
    for (const auto& [key, tag] : tables[static_cast<std::size_t>(c)]) {
      std::uint8_t where = (key.s & bit) ? kInS : (key.a & bit) ? kInA : kInB;
      out.emplace(Key{drop_bit(key.s, p), drop_bit(key.a, p), drop_bit(key.b, p)}, where);
    }
  }

  void join(int t, int left, int right) {
    Table& out = tables[static_cast<std::size_t>(t)];
    const Table& l = tables[static_cast<std::size_t>(left)];
    const Table& r = tables[static_cast<std::size_t>(right)];
    for (const auto& [key, tag] : l) {
      if (key.a != 0 && key.b != 0) {
        if (r.count(key)) out.emplace(key, kBoth);
      } else {
        out.emplace(key, kLeft);
      }
    }
    for (const auto& [key, tag] : r)
      if (key.a == 0 || key.b == 0) out.emplace(key, kRight);
    if (forgets_below[static_cast<std::size_t>(left)] && forgets_below[static_cast<std::size_t>(right)] && independent(t, full(t)))
      out.emplace(Key{full(t), 0, 0}, kFresh);
  }

  void check_bound(int t) const {
    const long double ell = rtd.refined[static_cast<std::size_t>(t)].size();
    const int k = rtd.residual_alpha;
    const int width = static_cast<int>(bag[static_cast<std::size_t>(t)].size());
    long double choose = 0, term = 1;
    for (int i = 0; i <= std::min(k, width); ++i) {
      choose += term;
      term = term * (width - i) / (i + 1);
    }
    const long double bound = std::pow(3.0L, ell) * choose * std::pow(2.0L, k);
    if (static_cast<long double>(tables[static_cast<std::size_t>(t)].size()) > bound)
      throw InternalError("dp table at node " + std::to_string(t) + " exceeds 3^l * sum C(|X_t|, i) * 2^k");
  }

  void run() {
    std::vector<int> post;
    std::vector<std::pair<int, bool>> stack{{td.root, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        post.push_back(t);
        continue;
      }
      stack.emplace_back(t, true);
      for (int c : td.children[static_cast<std::size_t>(t)]) stack.emplace_back(c, false);
    }
    const auto& kind = rtd.nice.kind;
    const auto& vertex = rtd.nice.vertex;
    for (int t : post) {
      const auto ts = static_cast<std::size_t>(t);
      const auto& kids = td.children[ts];
      forgets_below[ts] = kind[ts] == NodeKind::forget;
      for (int c : kids) forgets_below[ts] = forgets_below[ts] || forgets_below[static_cast<std::size_t>(c)];
      switch (kind[ts]) {
        case NodeKind::leaf: break;
        case NodeKind::introduce: introduce(t, kids[0], vertex[ts]); break;
        case NodeKind::forget: forget(t, kids[0], vertex[ts]); break;
        case NodeKind::join: join(t, kids[0], kids[1]); break;
      }
      check_bound(t);
      entries += static_cast<long long>(tables[ts].size());
      widest = std::max<long long>(widest, static_cast<long long>(tables[ts].size()));
    }
  }

  VertexSet to_set(int t, std::uint64_t mask) const {
    VertexSet s = g.empty_set();
    for (std::uint64_t r = mask; r; r &= r - 1)
      s.insert(bag[static_cast<std::size_t>(t)][static_cast<std::size_t>(std::countr_zero(r))]);
    return s;
  }

  VertexSet reconstruct(Key root_key) const {
    VertexSet witness = g.empty_set();
    std::vector<std::pair<int, Key>> stack{{td.root, root_key}};
    const auto& kind = rtd.nice.kind;
    const auto& vertex = rtd.nice.vertex;
    while (!stack.empty()) {
      auto [t, key] = stack.back();
      stack.pop_back();
      const auto ts = static_cast<std::size_t>(t);
      witness |= to_set(t, key.s);
      const std::uint8_t tag = tables[ts].at(key);
      const auto& kids = td.children[ts];
      switch (kind[ts]) {
        case NodeKind::leaf: break;
        case NodeKind::introduce: {
          if (tag == kFresh) break;
          const int p = position(t, vertex[ts]);
          stack.emplace_back(kids[0], Key{drop_bit(key.s, p), drop_bit(key.a, p), drop_bit(key.b, p)});
          break;
        }
        case NodeKind::forget: {
          const int p = position(kids[0], vertex[ts]);
          const std::uint64_t bit = std::uint64_t{1} << p;
          Key child{open_bit(key.s, p), open_bit(key.a, p), open_bit(key.b, p)};
          (tag == kInS ? child.s : tag == kInA ? child.a : child.b) |= bit;
          stack.emplace_back(kids[0], child);
          break;
        }
        case NodeKind::join:
          if (tag & kLeft) stack.emplace_back(kids[0], key);
          if (tag & kRight) stack.emplace_back(kids[1], key);
          break;
      }
    }
    return witness;
  }
};

}  // namespace

std::vector<std::vector<DpEntry>> dp_true_entries(const Graph& g, const RefinedNiceTreeDecomposition& rtd) {
  validate_refined(g, rtd);
  Evaluator ev(g, rtd);
  ev.run();
  std::vector<std::vector<DpEntry>> out(ev.tables.size());
  for (std::size_t t = 0; t < ev.tables.size(); ++t)
    for (const auto& [key, tag] : ev.tables[t])
      out[t].push_back({ev.to_set(static_cast<int>(t), key.s), ev.to_set(static_cast<int>(t), key.a),
                        ev.to_set(static_cast<int>(t), key.b)});
  return out;
}

SolveOutcome dp_solve(const Graph& g, const RefinedNiceTreeDecomposition& rtd) {
  Stopwatch clock;
  require_connected(g, "dp_solve");
  validate_refined(g, rtd);
  SolveOutcome out;
  out.algorithm = "treewidth-dp";
  out.parameter = "l=" + std::to_string(rtd.ell) + ",k=" + std::to_string(rtd.residual_alpha);
  Evaluator ev(g, rtd);
  ev.run();
  out.stats["nodes"] = rtd.nice.td.size();
  out.stats["table_entries"] = ev.entries;
  out.stats["widest_table"] = ev.widest;
  out.stats["width"] = rtd.nice.td.width();
  const Key empty{0, 0, 0};
  if (ev.tables[static_cast<std::size_t>(rtd.nice.td.root)].count(empty))
    accept_witness(out, g, ev.reconstruct(empty));
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome solve_by_chordal_deletion(const Graph& g, const VertexSet& x) {
  Stopwatch clock;
  require_connected(g, "solve_by_chordal_deletion");
  Subgraph rest = induced_subgraph(g, g.vertices() - x);
  std::vector<Vertex> hole;
  if (!recognize_chordal(rest.graph, &hole)) {
    for (Vertex& v : hole) v = rest.to_parent[static_cast<std::size_t>(v)];
    throw ContractViolation("g - X is not chordal: chordless cycle " + format_cycle(g, hole));
  }
  TreeDecomposition local = clique_tree(rest.graph);
  TreeDecomposition td = local;
  for (auto& bag : td.bags) bag = rest.lift(bag) | x;
  NiceTreeDecomposition ntd = make_nice(g, td);
  for (const auto& bag : ntd.td.bags) {
    const VertexSet body = bag - x;
    for (Vertex v : body)
      if (!body.without(v).is_subset_of(g.neighbors(v)))
        throw InternalError("solve_by_chordal_deletion: a bag minus X is not a clique");
  }
  RefinedNiceTreeDecomposition rtd = refine_with_deletion_set(g, ntd, x);
  if (rtd.residual_alpha > 1) throw InternalError("solve_by_chordal_deletion: residual independence number above 1");
  SolveOutcome out = dp_solve(g, rtd);
  out.algorithm = "chordal-td";
  out.parameter = "l=" + std::to_string(x.size());
  out.stats["residual_alpha"] = rtd.residual_alpha;
  out.time_ms = clock.elapsed_ms();
  return out;
}

namespace {

bool hit_holes(const Graph& g, VertexSet& removed, int budget) {
  Subgraph rest = induced_subgraph(g, g.vertices() - removed);
  std::vector<Vertex> hole;
  if (recognize_chordal(rest.graph, &hole)) return true;
  if (budget == 0) return false;
  for (Vertex local : hole) {
    Vertex v = rest.to_parent[static_cast<std::size_t>(local)];
    removed.insert(v);
    if (hit_holes(g, removed, budget - 1)) return true;
    removed.erase(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> brute_chordal_deletion(const Graph& g, int k) {
  if (k < 0 || k > 4) throw ContractViolation("brute_chordal_deletion supports 0 <= k <= 4");
  for (int budget = 0; budget <= k; ++budget) {
    VertexSet removed = g.empty_set();
    if (hit_holes(g, removed, budget)) return removed;
  }
  return std::nullopt;
}

namespace {

std::unordered_map<std::uint64_t, Vertex> label_index(const Graph& g) {
  std::unordered_map<std::uint64_t, Vertex> index;
  for (Vertex v = 0; v < g.vertex_count(); ++v) index[g.label(v)] = v;
  return index;
}

VertexSet parse_labels(const std::string& text, const Graph& g, const std::unordered_map<std::uint64_t, Vertex>& index,
                       int line) {
  VertexSet s = g.empty_set();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::uint64_t label = 0;
    try {
      label = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError(line, "bad vertex label '" + item + "'");
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(line, "unknown vertex " + item);
    s.insert(it->second);
  }
  return s;
}

std::string format_labels(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ",") + label_of(g, v);
  return out;
}

}  // namespace

RefinedNiceTreeDecomposition read_decomposition(std::istream& in, const Graph& g) {
  const auto index = label_index(g);
  std::unordered_map<long long, int> ids;
  TreeDecomposition td;
  std::vector<std::optional<std::pair<NodeKind, Vertex>>> kinds;
  std::vector<VertexSet> refined;
  std::vector<std::pair<long long, long long>> edges;
  std::vector<int> edge_lines;
  long long root_name = -1;
  int root_line = 0;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string head;
    if (!(words >> head)) continue;
    if (head == "node") {
      long long name = 0;
      if (!(words >> name) || name < 0) throw ParseError(line, "node needs a non-negative id");
      if (ids.count(name)) throw ParseError(line, "node " + std::to_string(name) + " declared twice");
      ids[name] = td.add_node(g.empty_set(), -1);
      kinds.emplace_back();
      refined.push_back(g.empty_set());
      bool has_bag = false;
      std::string field;
      while (words >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + field + "'");
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "bag") {
          td.bags.back() = parse_labels(value, g, index, line);
          has_bag = true;
        } else if (key == "refined") {
          refined.back() = parse_labels(value, g, index, line);
        } else if (key == "kind") {
          auto colon = value.find(':');
          std::string name_part = value.substr(0, colon);
          Vertex v = -1;
          if (colon != std::string::npos) {
            VertexSet one = parse_labels(value.substr(colon + 1), g, index, line);
            if (one.size() != 1) throw ParseError(line, "kind needs exactly one vertex");
            v = one.first();
          }
          if (name_part == "leaf" && v == -1) kinds.back() = {{NodeKind::leaf, -1}};
          else if (name_part == "join" && v == -1) kinds.back() = {{NodeKind::join, -1}};
          else if (name_part == "introduce" && v != -1) kinds.back() = {{NodeKind::introduce, v}};
          else if (name_part == "forget" && v != -1) kinds.back() = {{NodeKind::forget, v}};
          else throw ParseError(line, "bad node kind '" + value + "'");
        } else {
          throw ParseError(line, "unknown node field '" + key + "'");
        }
      }
      if (!has_bag) throw ParseError(line, "node without bag=");
    } else if (head == "edge") {
      long long p = 0, c = 0;
      if (!(words >> p >> c)) throw ParseError(line, "edge needs two node ids");
      edges.emplace_back(p, c);
      edge_lines.push_back(line);
    } else if (head == "root") {
      if (!(words >> root_name)) throw ParseError(line, "root needs a node id");
      root_line = line;
    } else {
      throw ParseError(line, "unknown record '" + head + "'");
    }
    std::string extra;
    if (head != "node" && (words >> extra)) throw ParseError(line, "trailing text '" + extra + "'");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto p = ids.find(edges[i].first), c = ids.find(edges[i].second);
    if (p == ids.end() || c == ids.end()) throw ParseError(edge_lines[i], "edge names an undeclared node");
    if (td.parent[static_cast<std::size_t>(c->second)] != -1) throw ParseError(edge_lines[i], "node has two parents");
    td.parent[static_cast<std::size_t>(c->second)] = p->second;
    td.children[static_cast<std::size_t>(p->second)].push_back(c->second);
  }
  if (root_line == 0) throw ParseError(0, "missing root record");
  auto r = ids.find(root_name);
  if (r == ids.end()) throw ParseError(root_line, "root names an undeclared node");
  td.root = r->second;

  const bool all_kinds = std::all_of(kinds.begin(), kinds.end(), [](const auto& k) { return k.has_value(); });
  const bool any_kind = std::any_of(kinds.begin(), kinds.end(), [](const auto& k) { return k.has_value(); });
  const bool any_refined = std::any_of(refined.begin(), refined.end(), [](const VertexSet& s) { return !s.empty(); });
  if (any_kind && !all_kinds) throw ParseError(0, "either every node or no node carries kind=");
  NiceTreeDecomposition ntd;
  if (all_kinds && !kinds.empty()) {
    ntd.td = td;
    for (const auto& k : kinds) {
      ntd.kind.push_back(k->first);
      ntd.vertex.push_back(k->second);
    }
  } else {
    if (any_refined) throw ParseError(0, "refined= needs a nice decomposition (kind= on every node)");
    ntd = make_nice(g, td);
    refined.assign(static_cast<std::size_t>(ntd.td.size()), g.empty_set());
  }
  RefinedNiceTreeDecomposition rtd;
  rtd.nice = std::move(ntd);
  rtd.refined = std::move(refined);
  for (std::size_t t = 0; t < rtd.refined.size(); ++t) {
    rtd.ell = std::max(rtd.ell, rtd.refined[t].size());
    rtd.residual_alpha = std::max(rtd.residual_alpha, independence_number(g, rtd.nice.td.bags[t] - rtd.refined[t]));
  }
  validate_refined(g, rtd);
  return rtd;
}

void write_decomposition(std::ostream& out, const Graph& g, const RefinedNiceTreeDecomposition& rtd) {
  const auto& td = rtd.nice.td;
  for (int t = 0; t < td.size(); ++t) {
    const auto ts = static_cast<std::size_t>(t);
    out << "node " << t << " kind=";
    switch (rtd.nice.kind[ts]) {
      case NodeKind::leaf: out << "leaf"; break;
      case NodeKind::join: out << "join"; break;
      case NodeKind::introduce: out << "introduce:" << g.label(rtd.nice.vertex[ts]); break;
      case NodeKind::forget: out << "forget:" << g.label(rtd.nice.vertex[ts]); break;
    }
    out << " bag=" << format_labels(g, td.bags[ts]);
    if (!rtd.refined[ts].empty()) out << " refined=" << format_labels(g, rtd.refined[ts]);
    out << '\n';
  }
  for (int t = 0; t < td.size(); ++t)
    for (int c : td.children[static_cast<std::size_t>(t)]) out << "edge " << t << ' ' << c << '\n';
  out << "root " << td.root << '\n';
}

}  // namespace indcut
