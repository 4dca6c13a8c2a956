#include "indcut/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "indcut/errors.hpp"

namespace indcut {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ',') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, int line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

template <class F>
void for_each_line(std::string_view text, F f) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    f(line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

Graph parse_edge_list(std::string_view text) {
  struct RawEdge {
    std::uint64_t u, v;
    int line;
  };
  std::vector<RawEdge> raw;
  std::set<std::uint64_t> labels;
  for_each_line(text, [&](int line_no, std::string_view line) {
    auto toks = tokens(line);
    if (toks.empty()) return;
    if (toks.size() != 2) throw ParseError(line_no, "expected two vertex labels");
    std::uint64_t u = parse_number(toks[0], line_no);
    std::uint64_t v = parse_number(toks[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
    raw.push_back({u, v, line_no});
    labels.insert(u);
    labels.insert(v);
  });
  std::map<std::uint64_t, Vertex> id;
  std::vector<std::uint64_t> names(labels.begin(), labels.end());
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<Vertex>(i);
  Graph g(static_cast<int>(names.size()));
  for (const auto& e : raw)
    if (!g.add_edge(id[e.u], id[e.v]))
      throw ParseError(e.line, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  g.set_labels(std::move(names));
  return g;
}

Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  int n = 0;
  std::uint64_t m = 0;
  std::uint64_t seen = 0;
  Graph g;
  int last_line = 0;
  for_each_line(text, [&](int line_no, std::string_view line) {
    last_line = line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") return;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "second problem line");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = static_cast<int>(parse_number(toks[2], line_no));
      m = parse_number(toks[3], line_no);
      g = Graph(n);
      std::vector<std::uint64_t> labels(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i) + 1;
      g.set_labels(std::move(labels));
      have_header = true;
      return;
    }
    if (toks[0] != "e") throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    if (!have_header) throw ParseError(line_no, "edge before problem line");
    if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
    std::uint64_t u = parse_number(toks[1], line_no);
    std::uint64_t v = parse_number(toks[2], line_no);
    if (u < 1 || v < 1 || u > static_cast<std::uint64_t>(n) || v > static_cast<std::uint64_t>(n))
      throw ParseError(line_no, "vertex out of declared range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
    if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    ++seen;
  });
  if (!have_header) throw ParseError(last_line, "missing problem line");
  if (seen != m)
    throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> named;
  for (auto [u, v] : g.edges()) {
    auto a = g.label(u);
    auto b = g.label(v);
    named.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(named.begin(), named.end());
  for (auto [a, b] : named) out << a << ' ' << b << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) { return parse_graph(read_text_file(path), format); }

VertexSet parse_vertex_list(std::string_view text, const Graph& g) {
  std::map<std::uint64_t, Vertex> id;
  for (Vertex v = 0; v < g.vertex_count(); ++v) id[g.label(v)] = v;
  VertexSet out = g.empty_set();
  for_each_line(text, [&](int line_no, std::string_view line) {
    for (auto tok : tokens(line)) {
      auto label = parse_number(tok, line_no);
      auto it = id.find(label);
      if (it == id.end()) throw ParseError(line_no, "unknown vertex " + std::to_string(label));
      out.insert(it->second);
    }
  });
  return out;
}

}  // namespace indcut
