#pragma once

// Colored-clique to clique-cover reduction: instance generator and small
// exhaustive equivalence check.

#include <cstdint>
#include <string>
#include <vector>

#include "bgcolor/graph.hpp"
#include "bgcolor/structures.hpp"

namespace bgcolor {

/// k parts of n vertices each; vertex (i, j) has label i*n + j.
struct ColoredCliqueInstance {
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;  // only between distinct parts
  [[nodiscard]] Vertex label(int part, int index) const { return part * n + index; }
};

struct ReducedInstance {
  int k = 0;
  int n = 0;
  Graph graph;
  int target = 0;
  /// Human-readable names, 1-indexed like the construction: "v1,2", "w1,2", "u3".
  std::vector<std::string> labels;

  [[nodiscard]] Vertex v(int part, int index) const { return part * n + index; }
  [[nodiscard]] Vertex w(int part, int index) const { return k * n + part * (n - 1) + index; }
  [[nodiscard]] Vertex u(int index) const { return k * n + k * (n - 1) + index; }
};

/// Throws std::invalid_argument on k < 1, n < 1, out-of-range labels or an
/// edge inside one part.
[[nodiscard]] ReducedInstance build_reduction(const ColoredCliqueInstance& inst);

/// {u_i, v_i1} for i < k, {w_ij, v_i(j+1)}, and {u_{k+1}, u_{k+2}}.
[[nodiscard]] Matching canonical_perfect_matching(const ReducedInstance& r);

/// Every cross-part pair present independently with probability prob.
[[nodiscard]] ColoredCliqueInstance random_colored_clique_instance(int k, int n, double prob, std::uint64_t seed);

/// Brute force over the n^k transversals.
[[nodiscard]] bool has_colored_clique(const ColoredCliqueInstance& inst);

inline constexpr int kMaxEquivalenceVertices = 18;

/// [inst has a colored k-clique] == [theta(reduced graph) <= target], with
/// theta computed exactly. GuardError when 2kn + 2 > 18.
[[nodiscard]] bool verify_equivalence_small(const ColoredCliqueInstance& inst);

}  // namespace bgcolor
