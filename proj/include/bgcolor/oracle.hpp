#pragma once

// Exhaustive ground-truth solvers used to cross-validate the randomized
// components. Each carries a size guard (GuardError beyond it).

#include "bgcolor/graph.hpp"

namespace bgcolor::oracle {

inline constexpr int kMaxChromaticVertices = 18;
inline constexpr int kMaxIndependentSetVertices = 40;
inline constexpr int kMaxMatchingVertices = 14;

/// chi(g) by subset DP: chi(T) = 1 + min chi(T \ I) over independent sets I
/// of g[T] that contain min(T) and are maximal in g[T]. n <= 18.
[[nodiscard]] int chromatic_number_exact(const Graph& g);

/// chi(g) by backtracking with saturation ordering and an incumbent bound;
/// independent of the DP above. n <= 64.
[[nodiscard]] int chromatic_number_branch_and_bound(const Graph& g);

/// theta(g) = chi(complement(g)). n <= 18.
[[nodiscard]] int clique_cover_number_exact(const Graph& g);

/// alpha(g) by branch-and-bound on bit-rows. n <= 40.
[[nodiscard]] int max_independent_set_exact(const Graph& g);

/// omega(g) = alpha(complement(g)). n <= 40.
[[nodiscard]] int clique_number_exact(const Graph& g);

/// mu(g) by exhaustive recursion. n <= 14.
[[nodiscard]] int maximum_matching_exact(const Graph& g);

}  // namespace bgcolor::oracle
