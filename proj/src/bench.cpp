#include "bgcolor/bench.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bgcolor/generators.hpp"

namespace bgcolor {

std::vector<BenchRecord> bench_scaling(const std::vector<int>& p_values, int n, int trials, std::uint64_t seed,
                                       int target, const SolveOptions& base, int timing_runs) {
  if (timing_runs < 1) throw std::invalid_argument("timing_runs must be positive");
  std::vector<BenchRecord> out;
  for (int p : p_values) {
    for (int trial = 0; trial < trials; ++trial) {
      const auto inst_seed = Rng::derive_seed(seed, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(trial));
      const auto inst = gen_planted_comodulator(n, p, inst_seed, 0.5, true);
      SolveOptions opts = base;
      opts.seed = inst_seed;
      opts.stop_at_first_yes = false;
      const ModulatorInstance mi{inst.cover_side, inst.s, target};
      SolveReport r = solve_clique_cover_with_modulator(mi, opts);
      double best = r.elapsed_ms;
      for (int run = 1; run < timing_runs; ++run) best = std::min(best, solve_clique_cover_with_modulator(mi, opts).elapsed_ms);
      out.push_back({n, p, trial, target, to_string(r.branch), best, r.decision, inst_seed});
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,p_mod,trial,target,branch,elapsed_ms,decision,seed\n";
  for (const auto& r : records)
    out << r.n << ',' << r.p_mod << ',' << r.trial << ',' << r.target << ',' << r.branch << ',' << r.elapsed_ms << ','
        << (r.decision ? "yes" : "no") << ',' << r.seed << '\n';
}

std::vector<std::pair<int, double>> median_by_p(const std::vector<BenchRecord>& records) {
  std::vector<int> order;
  std::map<int, std::vector<double>> times;
  for (const auto& r : records) {
    if (!times.count(r.p_mod)) order.push_back(r.p_mod);
    times[r.p_mod].push_back(r.elapsed_ms);
  }
  std::vector<std::pair<int, double>> out;
  for (int p : order) {
    auto& v = times[p];
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    out.emplace_back(p, v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]));
  }
  return out;
}

}  // namespace bgcolor
