#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bgcolor/modsolve.hpp"

namespace bgcolor {

struct BenchRecord {
  int n = 0;
  int p_mod = 0;
  int trial = 0;
  int target = 0;
  std::string branch;
  double elapsed_ms = 0.0;
  bool decision = false;
  std::uint64_t seed = 0;
};

/// Times solve_clique_cover_with_modulator on planted instances (balanced
/// bipartite base) with n vertices for every p in p_values, `trials`
/// instances each, all at the same target. The type sweep runs without early
/// exit, so the work does not depend on the answer. With target t the largest
/// Pfaffian has dimension 2t for every p, which isolates the 2^p factor.
/// Each instance is solved `timing_runs` times and the fastest run is kept,
/// since interference from other processes only ever adds time.
[[nodiscard]] std::vector<BenchRecord> bench_scaling(const std::vector<int>& p_values, int n, int trials,
                                                     std::uint64_t seed, int target, const SolveOptions& base = {},
                                                     int timing_runs = 1);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Median elapsed time per p, in the order of first appearance.
[[nodiscard]] std::vector<std::pair<int, double>> median_by_p(const std::vector<BenchRecord>& records);

}  // namespace bgcolor
