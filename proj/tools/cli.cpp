#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "indcut/dominating.hpp"
#include "indcut/dual.hpp"
#include "indcut/enumeration.hpp"
#include "indcut/errors.hpp"
#include "indcut/exact.hpp"
#include "indcut/generators.hpp"
#include "indcut/graph_io.hpp"
#include "indcut/oracle.hpp"
#include "indcut/structured.hpp"
#include "indcut/treewidth.hpp"

namespace indcut::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string algorithm = "auto";
  std::string graph_path;
  std::string dominating_set, oct, deletion_set, decomposition;
  int hitting_k = -1, k = -1, t = -1, c = -1;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "edges";
  bool csv = false;
  std::string witness;
  std::string scenario;
  int n = 40, trials = 10, n_max = 7, n_min = 8, random_count = 0;
  double p = 0.1;
};

GraphFormat format_of(const Options& o) { return o.format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list; }

VertexSet vertex_file(const std::string& path, const Graph& g) { return parse_vertex_list(read_text_file(path), g); }

template <class T>
T need(T value, const char* flag, const std::string& algorithm) {
  if (value < 0) throw UsageError("--algorithm " + algorithm + " requires " + flag);
  return value;
}

const std::string& need(const std::string& value, const char* flag, const std::string& algorithm) {
  if (value.empty()) throw UsageError("--algorithm " + algorithm + " requires " + flag);
  return value;
}

SolveOutcome solve_auto(const Graph& g) {
  Stopwatch clock;
  const int n = g.vertex_count(), m = g.edge_count();
  SolveOutcome out;
  std::string route;
  if (auto fast = decide_exact_fastpath_trianglefree(g)) {
    out = *fast;
    route = "trianglefree-vertex";
  } else if (!find_induced_matching(g, 2)) {
    out = decide_2k2_free(g);
    route = "2k2";
  } else {
    out = decide_exact(g);
    route = "exact";
  }
  // Connected graphs with n >= 4 and m <= 2n - 4 are expected to answer yes.
  out.stats["sparse_bound"] = n >= 4 && m <= 2 * n - 4;
  out.algorithm = "auto";
  out.parameter = "route=" + route;
  out.time_ms = clock.elapsed_ms();
  return out;
}

SolveOutcome dispatch(const Graph& g, const Options& o) {
  const std::string& a = o.algorithm;
  if (a == "auto") return solve_auto(g);
  if (a == "exact") return decide_exact(g);
  if (a == "2k2") return decide_2k2_free(g);
  if (a == "dual-degree") return solve_by_dual_degree(g);
  if (a == "dual-size") return solve_dual_solution_size(g, need(o.k, "--k", a));
  if (a == "dominating") return solve_with_dominating_set(g, vertex_file(need(o.dominating_set, "--dominating-set", a), g));
  if (a == "oct") return solve_by_oct(g, vertex_file(need(o.oct, "--oct", a), g));
  if (a == "triangle") return solve_by_triangle_hitting(g, need(o.hitting_k, "--hitting-k", a));
  if (a == "p5") return solve_p5_free(g);
  if (a == "p5-hitting") return solve_by_p5_hitting(g, need(o.hitting_k, "--hitting-k", a));
  if (a == "tk2") return solve_tk2_free(g, need(o.t, "--t", a));
  if (a == "alpha") {
    const int c = need(o.c, "--c", a);
    if (!o.dominating_set.empty()) return solve_alpha_dominated(g, vertex_file(o.dominating_set, g), c);
    if (!o.deletion_set.empty()) return solve_by_alpha_deletion(g, vertex_file(o.deletion_set, g), c);
    throw UsageError("--algorithm alpha requires --dominating-set or --deletion-set");
  }
  if (a == "chordal-td") {
    if (!o.decomposition.empty()) {
      std::ifstream in(o.decomposition);
      if (!in) throw Error("cannot open " + o.decomposition);
      return dp_solve(g, read_decomposition(in, g));
    }
    if (!o.deletion_set.empty()) return solve_by_chordal_deletion(g, vertex_file(o.deletion_set, g));
    if (o.hitting_k >= 0) {
      auto x = brute_chordal_deletion(g, o.hitting_k);
      if (!x) throw ParameterTooSmall("no chordal deletion set of size <= " + std::to_string(o.hitting_k));
      return solve_by_chordal_deletion(g, *x);
    }
    throw UsageError("--algorithm chordal-td requires --decomposition, --deletion-set or --hitting-k");
  }
  throw UsageError("unknown algorithm " + a);
}

Json labels(const Graph& g, const VertexSet& s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(g.label(v));
  return arr;
}

Json report(const Graph& g, const SolveOutcome& out) {
  Json j;
  j["answer"] = out.yes() ? "yes" : "no";
  j["witness"] = out.witness ? labels(g, *out.witness) : Json();
  j["verified"] = out.yes() ? Json(out.witness && is_independent_cutset(g, *out.witness)) : Json();
  j["algorithm"] = out.algorithm;
  j["parameter"] = out.parameter;
  Json stats = Json::object();
  for (const auto& [key, value] : out.stats) stats[key] = value;
  j["stats"] = stats;
  j["time_ms"] = out.time_ms;
  return j;
}

std::string csv_labels(const Graph& g, const std::optional<VertexSet>& s) {
  std::string text;
  if (!s) return text;
  for (Vertex v : *s) text += (text.empty() ? "" : " ") + std::to_string(g.label(v));
  return text;
}

void emit(std::ostream& out, const Graph& g, const SolveOutcome& res, bool csv) {
  Json j = report(g, res);
  if (!csv) {
    out << j.dump() << "\n";
    return;
  }
  out << "answer,witness,verified,algorithm,parameter,time_ms\n";
  out << j["answer"].get<std::string>() << "," << csv_labels(g, res.witness) << ","
      << (j["verified"].is_null() ? "" : j["verified"].get<bool>() ? "true" : "false") << "," << res.algorithm << ","
      << res.parameter << "," << res.time_ms << "\n";
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph_path, format_of(o));
  SolveOutcome res = dispatch(g, o);
  emit(out, g, res, o.csv);
  return 0;
}

int cmd_min(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph_path, format_of(o));
  Stopwatch clock;
  SolveOutcome res;
  res.algorithm = "min";
  res.parameter = "threads=" + std::to_string(o.threads);
  if (auto s = minimum_independent_cutset(g, o.threads)) {
    accept_witness(res, g, *s);
    res.stats["size"] = s->size();
  }
  res.time_ms = clock.elapsed_ms();
  emit(out, g, res, o.csv);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph_path, format_of(o));
  const VertexSet s = parse_vertex_list(o.witness, g);
  const bool independent = is_independent(g, s), cutset = is_cutset(g, s);
  if (o.csv) {
    out << "witness,independent,cutset,verified\n"
        << csv_labels(g, s) << "," << independent << "," << cutset << "," << (independent && cutset) << "\n";
    return 0;
  }
  Json j;
  j["witness"] = labels(g, s);
  j["independent"] = independent;
  j["cutset"] = cutset;
  j["verified"] = independent && cutset;
  out << j.dump() << "\n";
  return 0;
}

struct BenchRow {
  int n = 0, m = 0;
  std::string parameter, algorithm, answer;
  bool verified = false;
  long long counter = 0;
  double time_ms = 0;
};

BenchRow outcome_row(const Graph& g, const SolveOutcome& res, long long counter) {
  BenchRow r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.parameter = res.parameter;
  r.algorithm = res.algorithm;
  r.answer = res.yes() ? "yes" : "no";
  r.verified = res.yes() && res.witness && is_independent_cutset(g, *res.witness);
  r.counter = counter;
  r.time_ms = res.time_ms;
  return r;
}

long long stat(const SolveOutcome& res, const std::string& key) {
  auto it = res.stats.find(key);
  return it == res.stats.end() ? 0 : it->second;
}

VertexSet last_vertices(const Graph& g, int count) {
  VertexSet s = g.empty_set();
  for (Vertex v = g.vertex_count() - count; v < g.vertex_count(); ++v) s.insert(v);
  return s;
}

BenchRow bench_trial(const Options& o, std::uint64_t seed) {
  const std::string& sc = o.scenario;
  const int k = o.k < 0 ? 3 : o.k;
  if (sc == "chen-yu") {
    if (o.n < 4) throw UsageError("chen-yu needs --n >= 4");
    std::mt19937_64 rng(seed);
    const int m = o.n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.n - 2));
    Graph g = tree_plus_edges(o.n, m, seed);
    SolveOutcome res = decide_exact(g);
    return outcome_row(g, res, stat(res, "mis_examined"));
  }
  if (sc == "moonmoser") {
    const int t = o.n / 3;
    Graph g = triangle_union(t);
    Stopwatch clock;
    BenchRow r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.counter = count_maximal_independent_sets(g);
    r.parameter = "bound=" + std::to_string(static_cast<long long>(std::llround(std::pow(3.0, t))));
    r.algorithm = "mis-count";
    r.answer = "-";
    r.verified = r.parameter == "bound=" + std::to_string(r.counter);
    r.time_ms = clock.elapsed_ms();
    return r;
  }
  if (sc == "planted-domset") {
    Graph g = planted_dominating(o.n, k, o.p, seed);
    VertexSet x = g.empty_set();
    for (Vertex v = 0; v < k; ++v) x.insert(v);
    SolveOutcome res = solve_with_dominating_set(g, x);
    res.parameter = "k=" + std::to_string(k);
    return outcome_row(g, res, stat(res, "partitions2") + stat(res, "partitions3"));
  }
  if (sc == "chordal-plus-apex") {
    if (o.n <= k) throw UsageError("chordal-plus-apex needs --n > --k");
    Graph g = with_apices(random_chordal(o.n - k, seed), k, o.p, seed + 1);
    SolveOutcome res = solve_by_chordal_deletion(g, last_vertices(g, k));
    return outcome_row(g, res, stat(res, "table_entries"));
  }
  if (sc == "p5-distance") {
    if (o.n <= k) throw UsageError("p5-distance needs --n > --k");
    Graph g = with_apices(random_split(o.n - k, 0.5, seed), k, o.p, seed + 1);
    SolveOutcome res = solve_by_p5_hitting(g, k);
    return outcome_row(g, res, stat(res, "partitions2") + stat(res, "partitions3"));
  }
  throw UsageError("unknown scenario " + sc);
}

int cmd_bench(const Options& o, std::ostream& out) {
  out << "scenario,trial,seed,n,m,parameter,algorithm,answer,verified,counter,time_ms\n";
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = o.seed * 1000003ULL + static_cast<std::uint64_t>(trial);
    BenchRow r = bench_trial(o, seed);
    out << o.scenario << "," << trial << "," << seed << "," << r.n << "," << r.m << "," << r.parameter << ","
        << r.algorithm << "," << r.answer << "," << (r.verified ? "true" : "false") << "," << r.counter << ","
        << r.time_ms << "\n";
  }
  return 0;
}

void corpus_entry(std::ostream& out, const Graph& g, int index, GraphFormat format) {
  SolveOutcome res = brute_decide(g);
  out << "# graph " << index << " n=" << g.vertex_count() << " m=" << g.edge_count()
      << " answer=" << (res.yes() ? "yes" : "no");
  if (res.witness) out << " witness=" << csv_labels(g, res.witness);
  out << "\n" << serialize_graph(g, format) << "\n";
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.n_max < 2 || o.n_max > 7) throw UsageError("--n-max must lie in [2, 7]");
  int index = 0;
  for (const Graph& g : connected_graph_corpus(o.n_max)) corpus_entry(out, g, index++, format_of(o));
  if (o.random_count > 0)
    for (const Graph& g : random_connected_corpus(o.random_count, o.n_min, o.n, o.seed))
      corpus_entry(out, g, index++, format_of(o));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Independent cutset solver"};
  app.require_subcommand(1);
  const std::vector<std::string> algorithms{"exact",     "2k2", "dual-degree", "dual-size",  "dominating",
                                            "oct",       "triangle", "chordal-td", "p5", "p5-hitting",
                                            "alpha",     "tk2", "auto"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Graph file format")->check(CLI::IsMember({"edges", "dimacs"}));
    sub->add_flag("--csv", o.csv, "CSV output");
    sub->add_flag("--json", "JSON output (default)");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Random seed");
  };

  auto* solve = app.add_subcommand("solve", "Decide whether the graph has an independent cutset");
  add_common(solve);
  solve->add_option("graph", o.graph_path, "Graph file")->required();
  solve->add_option("--algorithm", o.algorithm, "Solver")->check(CLI::IsMember(algorithms));
  solve->add_option("--dominating-set", o.dominating_set, "Vertex-list file");
  solve->add_option("--oct", o.oct, "Odd cycle transversal vertex-list file");
  solve->add_option("--deletion-set", o.deletion_set, "Vertex-list file");
  solve->add_option("--decomposition", o.decomposition, "Tree decomposition file");
  solve->add_option("--hitting-k", o.hitting_k, "Budget for a searched hitting or deletion set");
  solve->add_option("--k", o.k, "Dual solution-size parameter");
  solve->add_option("--t", o.t, "Induced matching bound");
  solve->add_option("--c", o.c, "Independence bound of the dominating set");

  auto* min = app.add_subcommand("min", "Minimum independent cutset");
  add_common(min);
  min->add_option("graph", o.graph_path, "Graph file")->required();

  auto* verify = app.add_subcommand("verify", "Check a claimed witness");
  add_common(verify);
  verify->add_option("graph", o.graph_path, "Graph file")->required();
  verify->add_option("--witness", o.witness, "Comma separated labels")->required();

  auto* bench = app.add_subcommand("bench", "Seeded instance families, CSV output");
  add_common(bench);
  bench->add_option("--scenario", o.scenario, "Family")
      ->required()
      ->check(CLI::IsMember({"chen-yu", "moonmoser", "planted-domset", "chordal-plus-apex", "p5-distance"}));
  bench->add_option("--n", o.n, "Vertex count");
  bench->add_option("--k", o.k, "Planted parameter");
  bench->add_option("--p", o.p, "Edge probability");
  bench->add_option("--trials", o.trials, "Number of instances");

  auto* corpus = app.add_subcommand("corpus", "Export the oracle corpus with brute-force answers");
  add_common(corpus);
  corpus->add_option("--n-max", o.n_max, "Exhaustive corpus up to this order");
  corpus->add_option("--random", o.random_count, "Additional random connected graphs");
  corpus->add_option("--n-min", o.n_min, "Smallest random order");
  corpus->add_option("--n", o.n, "Largest random order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*min) return cmd_min(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*bench) return cmd_bench(o, out);
    if (*corpus) return cmd_corpus(o, out);
  } catch (const ParameterTooSmall& e) {
    err << "parameter too small: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace indcut::cli
