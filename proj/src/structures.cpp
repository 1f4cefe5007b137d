#include "bgcolor/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgcolor {

VertexSet TrianglePacking::vertices() const {
  VertexSet out;
  for (const auto& t : triangles) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.size(); }

}  // namespace

bool verify_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  for (auto [u, v] : m.edges) {
    if (!in_range(g, u) || !in_range(g, v) || u == v || !g.adjacent(u, v)) return false;
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return verify_matching(g, m) && 2 * m.size() == static_cast<std::size_t>(g.size());
}

bool verify_triangle_packing(const Graph& g, const TrianglePacking& t) {
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  for (const auto& tri : t.triangles) {
    for (Vertex v : tri) {
      if (!in_range(g, v) || used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
    if (!g.adjacent(tri[0], tri[1]) || !g.adjacent(tri[0], tri[2]) || !g.adjacent(tri[1], tri[2])) return false;
  }
  return true;
}

bool verify_clique_cover(const Graph& g, const CliqueCover& c) {
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  std::size_t covered = 0;
  for (const auto& clique : c.cliques) {
    if (clique.empty()) return false;
    for (std::size_t a = 0; a < clique.size(); ++a) {
      const Vertex v = clique[a];
      if (!in_range(g, v) || used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
      ++covered;
      for (std::size_t b = 0; b < a; ++b)
        if (!g.adjacent(clique[b], v)) return false;
    }
  }
  return covered == static_cast<std::size_t>(g.size());
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.color.size() != static_cast<std::size_t>(g.size()) || c.palette_size < 0) return false;
  for (int col : c.color)
    if (col < 0 || col >= c.palette_size) return false;
  for (auto [u, v] : g.edges())
    if (c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

// Lexicographically smallest triangle among vertices not yet removed.
bool find_smallest_triangle(const Graph& g, const std::vector<char>& removed, Triangle& out) {
  const int n = g.size();
  for (Vertex i = 0; i < n; ++i) {
    if (removed[static_cast<std::size_t>(i)]) continue;
    for (Vertex j = i + 1; j < n; ++j) {
      if (removed[static_cast<std::size_t>(j)] || !g.adjacent(i, j)) continue;
      for (Vertex k = j + 1; k < n; ++k) {
        if (!removed[static_cast<std::size_t>(k)] && g.adjacent(i, k) && g.adjacent(j, k)) {
          out = {i, j, k};
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_triangle_free(const Graph& g) {
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
  Triangle t{};
  return !find_smallest_triangle(g, removed, t);
}

TrianglePacking greedy_triangle_packing(const Graph& g) {
  TrianglePacking packing;
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
  Triangle t{};
  while (find_smallest_triangle(g, removed, t)) {
    packing.triangles.push_back(t);
    for (Vertex v : t) removed[static_cast<std::size_t>(v)] = 1;
  }
  return packing;
}

Matching greedy_maximal_matching(const Graph& g) {
  Matching m;
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  for (auto [u, v] : g.edges()) {
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    m.edges.emplace_back(u, v);
  }
  return m;
}

CliqueCover coloring_to_cover(const Graph& g, const Coloring& c) {
  if (!verify_coloring(g, c)) throw std::invalid_argument("coloring_to_cover: invalid coloring");
  std::vector<VertexSet> classes(static_cast<std::size_t>(c.palette_size));
  for (Vertex v = 0; v < g.size(); ++v) classes[static_cast<std::size_t>(c.color[static_cast<std::size_t>(v)])].push_back(v);
  CliqueCover cover;
  for (auto& cls : classes)
    if (!cls.empty()) cover.cliques.push_back(std::move(cls));
  return cover;
}

Coloring cover_to_coloring(const Graph& g, const CliqueCover& c) {
  if (!verify_clique_cover(complement(g), c)) throw std::invalid_argument("cover_to_coloring: invalid cover of the complement");
  Coloring col;
  col.color.assign(static_cast<std::size_t>(g.size()), 0);
  col.palette_size = static_cast<int>(c.size());
  for (std::size_t i = 0; i < c.cliques.size(); ++i)
    for (Vertex v : c.cliques[i]) col.color[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return col;
}

Witness translate_cover_coloring(const Graph& g, const Witness& w) {
  if (const auto* col = std::get_if<Coloring>(&w)) return coloring_to_cover(g, *col);
  return cover_to_coloring(g, std::get<CliqueCover>(w));
}

CliqueCover complete_with_singletons(int n, std::vector<VertexSet> cliques) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& c : cliques)
    for (Vertex v : c) used[static_cast<std::size_t>(v)] = 1;
  CliqueCover cover{std::move(cliques)};
  for (Vertex v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) cover.cliques.push_back({v});
  return cover;
}

Coloring guarantee_witness_coloring(const Graph& g) {
  const Matching m = greedy_maximal_matching(complement(g));
  std::vector<VertexSet> pairs;
  for (auto [u, v] : m.edges) pairs.push_back({u, v});
  return cover_to_coloring(g, complete_with_singletons(g.size(), std::move(pairs)));
}

}  // namespace bgcolor
