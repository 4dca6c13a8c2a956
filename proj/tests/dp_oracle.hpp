#pragma once

#include <set>
#include <vector>

#include "helpers.hpp"
#include "indcut/treewidth.hpp"

namespace indcut::testing {

inline VertexSet subtree_vertices(const TreeDecomposition& td, int t) {
  VertexSet out = td.bags[static_cast<std::size_t>(t)];
  for (int c : td.children[static_cast<std::size_t>(t)]) out |= subtree_vertices(td, c);
  return out;
}

// The table semantics checked from scratch over all independent S* inside V_t.
inline bool brute_entry(const Graph& g, const VertexSet& vt, const VertexSet& bag, const VertexSet& s,
                        const VertexSet& a, const VertexSet& b) {
  bool found = false;
  for_each_subset(g, [&](const VertexSet& star) {
    if (found || !star.is_subset_of(vt) || (star & bag) != s || !is_independent(g, star)) return;
    auto comps = components(g, g.vertices() - (vt - star));
    int with_a = 0, with_b = 0, free = 0;
    for (const auto& c : comps) {
      bool ha = c.intersects(a), hb = c.intersects(b);
      if (ha && hb) return;
      with_a += ha;
      with_b += hb;
      free += !ha && !hb;
    }
    found = (with_a > 0 || free > 0) && (with_b > 0 || free > 0) && with_a + with_b + free >= 2;
  });
  return found;
}

/// Every (S, A, B) split of every bag, compared with the listed true entries. Returns the number
/// of disagreements and adds the number of keys examined to `keys`.
inline int dp_table_mismatches(const Graph& g, const RefinedNiceTreeDecomposition& rtd, long long& keys) {
  auto entries = dp_true_entries(g, rtd);
  const auto& td = rtd.nice.td;
  int bad = 0;
  for (int t = 0; t < td.size(); ++t) {
    std::set<std::vector<std::vector<Vertex>>> truth;
    for (const auto& e : entries[static_cast<std::size_t>(t)])
      truth.insert({e.s.to_vector(), e.a.to_vector(), e.b.to_vector()});
    const VertexSet vt = subtree_vertices(td, t);
    const auto bag = td.bags[static_cast<std::size_t>(t)].to_vector();
    int combos = 1;
    for (std::size_t i = 0; i < bag.size(); ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      VertexSet s = g.empty_set(), a = g.empty_set(), b = g.empty_set();
      for (int i = 0, c = code; i < static_cast<int>(bag.size()); ++i, c /= 3)
        (c % 3 == 0 ? s : c % 3 == 1 ? a : b).insert(bag[static_cast<std::size_t>(i)]);
      ++keys;
      bool potential = is_independent(g, s);
      for (Vertex v : a) potential = potential && !g.neighbors(v).intersects(b);
      bool listed = truth.count({s.to_vector(), a.to_vector(), b.to_vector()}) > 0;
      bool expected = potential && brute_entry(g, vt, td.bags[static_cast<std::size_t>(t)], s, a, b);
      bad += listed != expected;
    }
  }
  return bad;
}

}  // namespace indcut::testing
