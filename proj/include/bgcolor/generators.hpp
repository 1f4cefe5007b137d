#pragma once

#include <cstdint>

#include "bgcolor/graph.hpp"

namespace bgcolor {

/// Erdos-Renyi G(n, prob); deterministic per seed.
[[nodiscard]] Graph gen_gnp(int n, double prob, std::uint64_t seed);

struct PlantedInstance {
  /// Random bipartite graph on the first n - p_mod vertices plus p_mod
  /// modulator vertices with random edges to everything else.
  Graph cover_side;
  /// complement(cover_side): the coloring-side instance.
  Graph coloring_side;
  /// The planted modulator (the last p_mod vertices).
  VertexSet s;
};

/// Deleting `s` from `cover_side` leaves a bipartite, hence triangle-free,
/// graph. Edge probability `prob` applies to both the bipartite part and the
/// modulator edges. With `balanced`, the bipartition is a random equal split
/// instead of independent coin flips per vertex.
[[nodiscard]] PlantedInstance gen_planted_comodulator(int n, int p_mod, std::uint64_t seed, double prob = 0.5,
                                                      bool balanced = false);

}  // namespace bgcolor
