#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bgcolor/graph.hpp"
#include "bgcolor/report.hpp"
#include "bgcolor/sqring.hpp"

namespace bgcolor {

/// Numbers of cover cliques meeting S-bar in 0, 1 and 2 vertices.
struct CoverType {
  int t0 = 0;
  int t1 = 0;
  int t2 = 0;
  friend bool operator==(const CoverType&, const CoverType&) = default;
};

/// All (t0, t1) with t1 <= nbar, nbar - t1 even, and t0 + (t1 + nbar)/2 <= target.
[[nodiscard]] std::vector<CoverType> enumerate_valid_types(int nbar, int target);

/// True iff deleting `s` leaves g triangle-free.
[[nodiscard]] bool check_modulator(const Graph& g, const VertexSet& s);

/// Cliques inside the modulator, indexed by bitmask over positions in `s`.
struct CliqueTable {
  VertexSet s;                       // ascending original labels
  std::vector<std::uint8_t> is_clique;  // 2^p entries
  std::vector<Subset> within_s_adj;  // per position in s
  std::vector<Subset> n_mask;        // per original vertex: N(v) within s
  [[nodiscard]] int p() const { return static_cast<int>(s.size()); }
  [[nodiscard]] Subset full() const { return static_cast<Subset>(is_clique.size() - 1); }
  [[nodiscard]] std::size_t clique_count() const;
};

[[nodiscard]] CliqueTable build_clique_table(const Graph& g, const VertexSet& s);

/// Sum over cliques C within `restriction` (the empty clique included) of a
/// fresh uniform coefficient times prod_{v in C} y_v.
[[nodiscard]] RingElement build_edge_polynomial(const CliqueTable& table, Subset restriction, Rng& rng);

/// Same over all nonempty cliques of the modulator.
[[nodiscard]] RingElement build_interior_polynomial(const CliqueTable& table, Rng& rng);

/// S-bar followed by t1 fresh vertices U; edges of g[S-bar] plus U x S-bar.
struct AuxGraph {
  VertexSet sbar;
  int t1 = 0;
  Graph h;
  [[nodiscard]] int size() const { return h.size(); }
  [[nodiscard]] bool is_u(int local) const { return local >= static_cast<int>(sbar.size()); }
};

[[nodiscard]] AuxGraph build_aux_graph(const Graph& g, const VertexSet& sbar, int t1);

enum class Engine {
  /// Per-subset evaluation in the ranked domain, parallel over subsets.
  kRanked,
  /// RingElement arithmetic with ring_mul; serial reference path.
  kRing,
};

struct SolveOptions {
  std::uint64_t seed = 1;
  int repeats = 3;
  Engine engine = Engine::kRanked;
  /// Above this many bytes of transformed entries the ranked engine defers to kRing.
  std::size_t ranked_memory_budget = std::size_t{2} << 30;
  /// Return on the first nonzero coefficient. Benchmarks turn this off to
  /// time the full type sweep regardless of the answer.
  bool stop_at_first_yes = true;
};

/// Coefficients of prod_{v in S} y_v in Pf(B) * phi_1 * ... * phi_t0 for
/// t0 = 0..t0_max, under one random evaluation seeded by `seed`. Both
/// engines consume the same random draws and return identical values.
[[nodiscard]] std::vector<Fp> full_monomial_coefficients(const CliqueTable& table,
                                                         const AuxGraph& aux, int t0_max, std::uint64_t seed,
                                                         Engine engine,
                                                         std::size_t ranked_memory_budget = std::size_t{2} << 30);

struct ModulatorInstance {
  Graph g;
  VertexSet s;
  int target = 0;
};

/// Decides whether inst.g has a clique cover with at most inst.target
/// cliques, given that deleting inst.s leaves g triangle-free. YES answers
/// are always correct; a YES instance is missed with probability at most
/// (n/q)^repeats per type. Throws std::invalid_argument when the modulator
/// check fails and GuardError when |s| > 24.
[[nodiscard]] SolveReport solve_clique_cover_with_modulator(const ModulatorInstance& inst, const SolveOptions& opts);

/// Is g colorable with `target` colors, given that deleting s from
/// complement(g) leaves it triangle-free.
[[nodiscard]] SolveReport solve_coloring_with_modulator(const Graph& g, const VertexSet& s, int target,
                                                        const SolveOptions& opts);

}  // namespace bgcolor
