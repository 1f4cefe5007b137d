#include "bgcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bgcolor/errors.hpp"

namespace bgcolor {

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (n_ > 64) throw GuardError("Graph::row_mask requires n <= 64");
  return row(v)[0];
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
  mutable_row(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  mutable_row(u)[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

Graph complement(const Graph& g) {
  const int n = g.size();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(g.size()), -1);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    out.to_local[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  const int m = static_cast<int>(vs.size());
  out.graph = Graph(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.adjacent(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)])) out.graph.add_edge(a, b);
  return out;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_problem = false;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (tag == "p") {
      if (have_problem) throw ParseError("duplicate problem line" + where);
      std::string format;
      long long n = -1;
      long long m = -1;
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
        throw ParseError("malformed problem line" + where);
      g = Graph(static_cast<int>(n));
      have_problem = true;
    } else if (tag == "e") {
      if (!have_problem) throw ParseError("edge before problem line" + where);
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line" + where);
      if (u < 1 || v < 1 || u > g.size() || v > g.size())
        throw ParseError("edge endpoint out of range" + where);
      if (u == v) throw ParseError("self-loop edge" + where);
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("unknown line tag '" + tag + "'" + where);
    }
  }
  if (!have_problem) throw ParseError("missing problem line");
  return g;
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto edges = g.edges();
  out << "p edge " << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad vertex '" + item + "'");
    if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace bgcolor
