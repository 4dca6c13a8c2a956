// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "dp_oracle.hpp"
#include "helpers.hpp"
#include "indcut/dominating.hpp"
#include "indcut/dual.hpp"
#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/exact.hpp"
#include "indcut/generators.hpp"
#include "indcut/graph_io.hpp"
#include "indcut/hypercut.hpp"
#include "indcut/oracle.hpp"
#include "indcut/sat2.hpp"
#include "indcut/structured.hpp"
#include "indcut/treewidth.hpp"
#include "instances.hpp"

using namespace indcut;
using namespace indcut::testing;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %s | %s | %.2f s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(const Stopwatch& clock) { return clock.elapsed_ms() / 1000.0; }

struct Witness {
  std::size_t graph;
  VertexSet set;
};

std::vector<Graph> criterion1_graphs() {
  auto graphs = connected_graph_corpus(7);
  for (const Graph& g : random_connected_corpus(1000, 8, 14, 2024)) graphs.push_back(g);
  return graphs;
}

VertexSet first_mis(const Graph& g) {
  VertexSet out = g.empty_set();
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    out = s;
    return false;
  });
  return out;
}

RefinedNiceTreeDecomposition brute_decomposition(const Graph& g, const VertexSet& u) {
  return refine_with_deletion_set(g, make_nice(g, optimal_tree_decomposition(g)), u);
}

bool verify_with_cli(const std::string& graph_path, const Graph& g, const VertexSet& s) {
  std::string labels;
  for (Vertex v : s) labels += (labels.empty() ? "" : ",") + std::to_string(g.label(v));
  const std::string a0 = "indcut", a1 = "verify", a3 = "--witness";
  const char* argv[] = {a0.c_str(), a1.c_str(), graph_path.c_str(), a3.c_str(), labels.c_str()};
  std::ostringstream out, err;
  if (cli::run(5, argv, out, err) != 0) return false;
  return out.str().find("\"verified\":true") != std::string::npos;
}

// Moon–Moser bound on the number of maximal independent sets of an n-vertex graph.
long long moon_moser(int n) {
  if (n <= 1) return 1;
  auto p3 = [](int e) { return static_cast<long long>(std::llround(std::pow(3.0, e))); };
  if (n % 3 == 0) return p3(n / 3);
  if (n % 3 == 1) return 4 * p3((n - 4) / 3);
  return 2 * p3((n - 2) / 3);
}

long long brute_mis_count(const Graph& g) {
  long long count = 0;
  for_each_subset(g, [&](const VertexSet& s) {
    if (!is_independent(g, s)) return;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!s.contains(v) && !g.neighbors(v).intersects(s)) return;
    ++count;
  });
  return count;
}

}  // namespace

int main() {
  std::vector<Witness> witnesses;
  const auto graphs1 = criterion1_graphs();

  {
    Stopwatch clock;
    long long mismatches = 0, runs = 0;
    for (std::size_t i = 0; i < graphs1.size(); ++i) {
      const Graph& g = graphs1[i];
      const bool expected = brute_decide(g).yes();
      const std::vector<std::function<SolveOutcome()>> solvers{
          [&] { return decide_exact(g); },
          [&] { return solve_by_independence_number(g); },
          [&] { return solve_by_dual_degree(g); },
          [&] { return dp_solve(g, brute_decomposition(g, g.empty_set())); },
          [&] { return solve_with_dominating_set(g, first_mis(g)); },
          [&] { return solve_with_dominating_set(g, g.vertices()); },
      };
      for (const auto& solve : solvers) {
        SolveOutcome out = solve();
        ++runs;
        mismatches += out.yes() != expected;
        if (out.yes()) witnesses.push_back({i, out.witness.value_or(g.empty_set())});
      }
    }
    const double secs = seconds_since(clock);
    report(1, "oracle equivalence", mismatches == 0 && secs <= 600,
           std::to_string(graphs1.size()) + " graphs, " + std::to_string(runs) + " solver runs, " +
               std::to_string(mismatches) + " mismatches",
           secs);
  }

  {
    Stopwatch clock;
    const auto dir = std::filesystem::temp_directory_path() / "indcut_acceptance";
    std::filesystem::create_directories(dir);
    long long bad_structural = 0, bad_cli = 0;
    std::size_t written = graphs1.size();
    std::string path;
    for (const auto& w : witnesses) {
      const Graph& g = graphs1[w.graph];
      if (w.graph != written) {
        path = (dir / ("g" + std::to_string(w.graph) + ".edges")).string();
        std::ofstream(path) << serialize_graph(g, GraphFormat::edge_list);
        written = w.graph;
      }
      bad_structural += !is_independent_cutset(g, w.set);
      bad_cli += !verify_with_cli(path, g, w.set);
    }
    std::filesystem::remove_all(dir);
    report(2, "witness soundness", bad_structural == 0 && bad_cli == 0 && !witnesses.empty(),
           std::to_string(witnesses.size()) + " yes witnesses, " + std::to_string(bad_structural) +
               " structural failures, " + std::to_string(bad_cli) + " rejected by verify",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    long long bad_min = 0, pairs = 0, bad_shrink = 0;
    for (const Graph& g : graphs1) {
      auto got = minimum_independent_cutset(g);
      auto want = brute_minimum(g);
      bad_min += got.has_value() != want.has_value() || (got && got->size() != want->size());
      if (g.vertex_count() > 10) continue;
      for (const auto& m : maximal_independent_sets(g)) {
        if (!is_cutset(g, m)) continue;
        ++pairs;
        VertexSet s = shrink_independent_cutset(g, m);
        std::optional<int> best;
        for_each_independent_subset(g, m, [&](const VertexSet& sub) {
          if ((!best || sub.size() < *best) && is_cutset(g, sub)) best = sub.size();
          return true;
        });
        bad_shrink += !s.is_subset_of(m) || !is_independent_cutset(g, s) || !best || s.size() != *best;
      }
    }
    report(3, "minimization", bad_min == 0 && bad_shrink == 0,
           std::to_string(graphs1.size()) + " minimum checks (" + std::to_string(bad_min) + " wrong), " +
               std::to_string(pairs) + " shrink pairs (" + std::to_string(bad_shrink) + " wrong)",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(404);
    int bad = 0, satisfiable = 0;
    for (int trial = 0; trial < 500; ++trial) {
      auto raw = random_separation(rng, 10);
      auto ctx = make_separation_context(raw.g, raw.a, raw.b);
      auto assignment = solve_2sat(build_separation_formula(ctx));
      auto brute = brute_separating(raw.g, raw.a, raw.b, raw.na | raw.nb);
      bad += assignment.has_value() != brute.has_value();
      if (assignment) {
        ++satisfiable;
        VertexSet s = extract_cutset(ctx, *assignment);
        bad += !is_independent(raw.g, s) || !separates(raw.g, s, raw.a, raw.b);
      }
    }
    report(4, "2-SAT separation equivalence", bad == 0,
           "500 instances, " + std::to_string(satisfiable) + " satisfiable, " + std::to_string(bad) + " disagreements",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(505);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
      Hypergraph h = random_hypergraph(rng, 12, 15);
      auto cut = min_edge_cut(h);
      bad += cut.value != brute_min_cut(h) || cut.value != h.cut_value(cut.side);
    }
    report(5, "hypergraph min cut", bad == 0, "500 hypergraphs, " + std::to_string(bad) + " disagreements",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(606);
    int no = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const int n = std::uniform_int_distribution<int>(4, 40)(rng);
      const int m = std::uniform_int_distribution<int>(n - 1, 2 * n - 4)(rng);
      Graph g = tree_plus_edges(n, m, rng());
      no += !decide_exact(g).yes();
    }
    report(6, "sparse graphs have independent cutsets", no == 0,
           "500 graphs with m <= 2n-4, " + std::to_string(no) + " answered no", seconds_since(clock));
  }

  {
    Stopwatch clock;
    int bad_union = 0, bad_random = 0;
    for (int t = 1; t <= 10; ++t)
      bad_union += count_maximal_independent_sets(triangle_union(t)) != moon_moser(3 * t);
    const long long at30 = count_maximal_independent_sets(triangle_union(10));
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 15)(rng);
      const double p = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
      std::bernoulli_distribution edge(p);
      Graph g(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (edge(rng)) g.add_edge(u, v);
      const long long count = count_maximal_independent_sets(g);
      bad_random += count != brute_mis_count(g) || count > moon_moser(n);
    }
    report(7, "Moon-Moser count", bad_union == 0 && bad_random == 0 && at30 == 59049,
           "triangle unions n=3..30 (" + std::to_string(at30) + " at n=30), " + std::to_string(bad_union) +
               " union mismatches, " + std::to_string(bad_random) + " random failures",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    const long long limit = 14348907;  // 3^15
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed : {1, 2, 3}) {
      Graph g = gnp(45, 0.3, seed);
      Stopwatch one;
      SolveOutcome out = decide_exact(g);
      const double secs = seconds_since(one);
      const long long mis = out.stats["mis_examined"];
      ok = ok && secs < 60 && mis <= limit;
      detail += (detail.empty() ? "" : ", ") + std::string("seed ") + std::to_string(seed) + ": " +
                (out.yes() ? "yes" : "no") + " mis=" + std::to_string(mis) + " " + std::to_string(secs) + "s";
    }
    report(8, "exact scaling", ok, detail, seconds_since(clock));
  }

  {
    Stopwatch clock;
    bool ok = true;
    std::string detail;
    auto run = [&](int n, int k, std::uint64_t seed, long long& partitions) {
      Graph g = planted_dominating(n, k, 0.1, seed);
      VertexSet x = g.empty_set();
      for (Vertex v = 0; v < k; ++v) x.insert(v);
      Stopwatch one;
      SolveOutcome out = solve_with_dominating_set(g, x);
      partitions = out.stats["partitions2"] + out.stats["partitions3"];
      if (out.yes() && !is_independent_cutset(g, *out.witness)) ok = false;
      return seconds_since(one);
    };
    for (int k : {4, 6, 8}) {
      const long long bound = static_cast<long long>(std::llround(std::pow(3.0, k)));
      double worst = 0;
      long long most = 0;
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        long long partitions = 0;
        worst = std::max(worst, run(150, k, seed, partitions));
        most = std::max(most, partitions);
      }
      ok = ok && worst < 60 && most <= bound;
      detail += "k=" + std::to_string(k) + " max " + std::to_string(worst) + "s partitions " + std::to_string(most) +
                "/" + std::to_string(bound) + ", ";
    }
    double t150 = 0, t300 = 0;
    for (std::uint64_t seed = 11; seed <= 15; ++seed) {
      long long partitions = 0;
      t150 += run(150, 6, seed, partitions);
      t300 += run(300, 6, seed, partitions);
    }
    const double ratio = t300 / std::max(t150, 1e-9);
    ok = ok && ratio < 20;
    detail += "n300/n150 time ratio " + std::to_string(ratio);
    report(9, "dominating-set FPT scaling", ok, detail, seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(1010);
    long long keys = 0;
    int bad = 0, graphs = 0;
    for (const Graph& g : connected_graph_corpus(6)) {
      VertexSet u = g.empty_set();
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (rng() % 3 == 0) u.insert(v);
      bad += dp_table_mismatches(g, brute_decomposition(g, g.empty_set()), keys);
      bad += dp_table_mismatches(g, brute_decomposition(g, u), keys);
      ++graphs;
    }
    report(10, "DP table entries", bad == 0,
           std::to_string(graphs) + " graphs, " + std::to_string(keys) + " keys, " + std::to_string(bad) + " wrong",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(1111);
    int bad = 0, alpha_off = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int ell = std::uniform_int_distribution<int>(1, 3)(rng);
      const int n = std::uniform_int_distribution<int>(8, 40 - ell)(rng);
      Graph g = with_apices(random_chordal(n, rng()), ell, 0.3, rng());
      VertexSet x = g.empty_set();
      for (Vertex v = n; v < n + ell; ++v) x.insert(v);
      SolveOutcome out = solve_by_chordal_deletion(g, x);
      bad += out.yes() != decide_exact(g).yes();
      // Recomputed independently of the solver's own report.
      Subgraph rest = induced_subgraph(g, g.vertices() - x);
      TreeDecomposition td = clique_tree(rest.graph);
      for (auto& bag : td.bags) bag = rest.lift(bag) | x;
      auto rtd = refine_with_deletion_set(g, make_nice(g, td), x);
      int alpha = 0;
      for (int t = 0; t < rtd.nice.td.size(); ++t)
        alpha = std::max(alpha, independence_number(g, rtd.nice.td.bags[static_cast<std::size_t>(t)] -
                                                           rtd.refined[static_cast<std::size_t>(t)]));
      alpha_off += alpha != 1 || out.stats["residual_alpha"] != 1;
    }
    report(11, "chordal pipeline", bad == 0 && alpha_off == 0,
           "200 instances, " + std::to_string(bad) + " mismatches, " + std::to_string(alpha_off) + " with residual alpha != 1",
           seconds_since(clock));
  }

  {
    Stopwatch clock;
    std::mt19937_64 rng(1212);
    int bad = 0, polynomial = 0, fallback = 0, alpha_rung = 0, assertion = 0;
    const int total = 300;
    for (int trial = 0; trial < total; ++trial) {
      const int n = std::uniform_int_distribution<int>(6, 30)(rng);
      const double p = std::uniform_real_distribution<double>(0.2, 0.6)(rng);
      Graph g = trial % 2 == 0 ? random_split(n, p, rng()) : random_cotriangle_free(n, p, rng());
      SolveOutcome out;
      try {
        out = solve_p5_free(g);
      } catch (const InternalError&) {
        ++assertion;
        continue;
      }
      bad += out.yes() != decide_exact(g).yes();
      if (out.stats["fallback_exact"]) {
        ++fallback;
      } else if (out.stats["rung_alpha_scan"]) {
        ++alpha_rung;
      } else {
        ++polynomial;
      }
    }
    const bool ok = bad == 0 && polynomial * 100 >= total * 95;
    report(12, "P5-free solver", ok,
           std::to_string(total) + " instances, " + std::to_string(bad) + " mismatches, " + std::to_string(polynomial) +
               " via scan/CDS rungs, " + std::to_string(alpha_rung) + " via alpha scan, " + std::to_string(fallback) +
               " exact fallbacks, " + std::to_string(assertion) + " failed the partition bound",
           seconds_since(clock));
  }

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
