#pragma once

#include <array>
#include <variant>
#include <vector>

#include "bgcolor/graph.hpp"

namespace bgcolor {

struct Matching {
  std::vector<Edge> edges;
  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

using Triangle = std::array<Vertex, 3>;

struct TrianglePacking {
  std::vector<Triangle> triangles;
  [[nodiscard]] std::size_t size() const { return triangles.size(); }
  /// All packed vertices, ascending.
  [[nodiscard]] VertexSet vertices() const;
};

struct CliqueCover {
  std::vector<VertexSet> cliques;
  [[nodiscard]] std::size_t size() const { return cliques.size(); }
};

struct Coloring {
  std::vector<int> color;
  int palette_size = 0;
};

using Witness = std::variant<CliqueCover, Coloring>;

[[nodiscard]] bool verify_matching(const Graph& g, const Matching& m);
[[nodiscard]] bool is_perfect_matching(const Graph& g, const Matching& m);
[[nodiscard]] bool verify_triangle_packing(const Graph& g, const TrianglePacking& t);
[[nodiscard]] bool verify_clique_cover(const Graph& g, const CliqueCover& c);
[[nodiscard]] bool verify_coloring(const Graph& g, const Coloring& c);

/// True iff g has no triangle; exhaustive.
[[nodiscard]] bool is_triangle_free(const Graph& g);

/// Repeatedly removes the lexicographically smallest triangle (i<j<k).
/// The residual graph is triangle-free on return.
[[nodiscard]] TrianglePacking greedy_triangle_packing(const Graph& g);

/// Lexicographic edge scan; the unmatched vertices form an independent set.
[[nodiscard]] Matching greedy_maximal_matching(const Graph& g);

/// Maximum-cardinality matching in a general graph (Edmonds' blossom algorithm).
[[nodiscard]] Matching maximum_matching(const Graph& g);

/// Coloring of g <-> clique cover of complement(g). Throws
/// std::invalid_argument when the witness is not valid for its graph.
[[nodiscard]] CliqueCover coloring_to_cover(const Graph& g, const Coloring& c);
[[nodiscard]] Coloring cover_to_coloring(const Graph& g, const CliqueCover& c);
[[nodiscard]] Witness translate_cover_coloring(const Graph& g, const Witness& w);

/// Pairs of a greedy maximal matching of complement(g) share a color, every
/// other vertex gets its own.
[[nodiscard]] Coloring guarantee_witness_coloring(const Graph& g);

/// Cover by the given disjoint cliques plus singletons for the remaining vertices.
[[nodiscard]] CliqueCover complete_with_singletons(int n, std::vector<VertexSet> cliques);

}  // namespace bgcolor
