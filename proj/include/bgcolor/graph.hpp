#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bgcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bit-rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  /// Neighborhood as a 64-bit mask; requires n <= 64.
  [[nodiscard]] std::uint64_t row_mask(Vertex v) const;

  [[nodiscard]] int degree(Vertex v) const;
  [[nodiscard]] std::size_t edge_count() const;
  /// Edges (u < v) in ascending lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Adds {u,v}; duplicates are merged. Throws std::invalid_argument on
  /// self-loops or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint64_t* mutable_row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

[[nodiscard]] Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// new index -> original vertex
  VertexSet to_original;
  /// original vertex -> new index, -1 when absent
  std::vector<int> to_local;
};

/// Subgraph induced by `vs` (deduplicated, kept in ascending order).
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs);

/// Parses DIMACS .col text. Vertices are 1-indexed in the text.
[[nodiscard]] Graph parse_dimacs(std::istream& in);
[[nodiscard]] Graph parse_dimacs(const std::string& text);
[[nodiscard]] Graph read_dimacs_file(const std::string& path);

/// Writes "p edge n m" followed by edges in ascending lexicographic order.
void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});
[[nodiscard]] std::string to_dimacs(const Graph& g);

/// Parses "v1,v2,..." (1-indexed) into sorted 0-indexed vertices.
[[nodiscard]] VertexSet parse_vertex_list(const std::string& text, int n);

// Named graphs used throughout tests and examples.
[[nodiscard]] Graph complete_graph(int n);
[[nodiscard]] Graph cycle_graph(int n);
[[nodiscard]] Graph path_graph(int n);
[[nodiscard]] Graph star_graph(int leaves);
[[nodiscard]] Graph petersen_graph();

}  // namespace bgcolor
