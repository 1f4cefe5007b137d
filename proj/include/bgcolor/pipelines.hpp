#pragma once

#include "bgcolor/modsolve.hpp"
#include "bgcolor/report.hpp"
#include "bgcolor/structures.hpp"

namespace bgcolor {

/// Is g (n - k)-colorable? Greedy triangle packing on the complement either
/// yields a cover of size n - 2t <= n - k, or its vertices form a modulator
/// of size 3t < 3k/2 for the algebraic solver. k = 0 is trivially YES.
[[nodiscard]] SolveReport solve_dual_coloring(const Graph& g, int k, const SolveOptions& opts);

/// Same decision through a maximum matching of the complement: mu >= k gives
/// a pair cover directly, otherwise the 2*mu matched vertices are the modulator.
[[nodiscard]] SolveReport solve_dual_coloring_baseline(const Graph& g, int k, const SolveOptions& opts);

struct LargePackingCover {
  CliqueCover cover;
  VertexSet s;  // vertices of the first 2k triangles
  int mu_out = 0;
  int alpha_out = 0;
};

/// Cover of gc by the first 2k packed triangles, a matching of gc - S and
/// singletons for what remains. The matching is maximum unless
/// `greedy_matching` is set, in which case it is only maximal.
/// Requires packing.size() > 2k.
[[nodiscard]] LargePackingCover construct_large_packing_cover(const Graph& gc, int k, const TrianglePacking& packing,
                                                              bool greedy_matching = false);

/// Is g (omega(g) + mu(complement g) - k)-colorable? k >= 1. More than 2k
/// packed triangles in the complement certify YES; otherwise the packing is a
/// modulator of size at most 6k. omega is computed exactly (n <= 40).
[[nodiscard]] SolveReport solve_below_structural_guarantee(const Graph& g, int k, const SolveOptions& opts,
                                                           bool greedy_matching = false);

}  // namespace bgcolor
