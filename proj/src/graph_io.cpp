#include "ladderlab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 19) return false;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> labels;

  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string t1, t2, rest;
    ss >> t1 >> t2;
    if (!have_header) {
      std::getline(ss, rest);
      if (!parse_u64(t1, n) || !parse_u64(t2, m) || rest.find_first_not_of(" \t") != std::string::npos)
        throw ParseError(lineno, "expected header '<n> <m>'");
      if (n > UINT32_MAX) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      continue;
    }
    if (t1 == "l") {
      if (edges.size() != m) throw ParseError(lineno, "label line before all edges were read");
      std::uint64_t v;
      if (!parse_u64(t2, v) || v >= n) throw ParseError(lineno, "bad label vertex");
      std::getline(ss, rest);
      auto start = rest.find_first_not_of(" \t");
      if (labels.empty()) labels.resize(n);
      labels[v] = start == std::string::npos ? std::string{} : rest.substr(start);
      continue;
    }
    std::getline(ss, rest);
    std::uint64_t u, v;
    if (!parse_u64(t1, u) || !parse_u64(t2, v) || rest.find_first_not_of(" \t") != std::string::npos)
      throw ParseError(lineno, "expected edge '<u> <v>'");
    if (!(u < v)) throw ParseError(lineno, "edge endpoints must satisfy u < v");
    if (v >= n) throw ParseError(lineno, "edge endpoint out of range");
    if (edges.size() == m) throw ParseError(lineno, "more edges than declared");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(lineno, 1), "missing header");
  if (edges.size() != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) out << "l " << v << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  write_edge_list(out, g);
}

void write_dot(std::ostream& out, const Graph& g, const std::vector<Vertex>& highlight) {
  std::set<Vertex> hl(highlight.begin(), highlight.end());
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    std::string attrs;
    if (!g.label(v).empty()) {
      std::string esc;
      for (char c : g.label(v)) {
        if (c == '"' || c == '\\') esc += '\\';
        esc += c;
      }
      attrs += "label=\"" + esc + "\"";
    }
    if (hl.count(v)) attrs += std::string(attrs.empty() ? "" : ", ") + "style=filled";
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace ladderlab
