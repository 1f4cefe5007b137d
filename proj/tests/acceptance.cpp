// End-to-end acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bgcolor/bench.hpp"
#include "bgcolor/generators.hpp"
#include "bgcolor/modsolve.hpp"
#include "bgcolor/oracle.hpp"
#include "bgcolor/pfaffian.hpp"
#include "bgcolor/pipelines.hpp"
#include "bgcolor/reduction.hpp"
#include "bgcolor/sqring.hpp"
#include "test_support.hpp"

using namespace bgcolor;
using bgcolor::testing::bareiss_determinant;
using bgcolor::testing::naive_convolution;
using bgcolor::testing::random_element;
using bgcolor::testing::random_skew;

namespace {

// Pinned thresholds.
constexpr std::uint64_t kRootSeed = 20261019;
constexpr int kRepeats = 3;
constexpr double kRatioLow = 1.5;
constexpr double kRatioHigh = 3.0;
constexpr int kRatiosRequired = 4;
constexpr int kScalingN = 22;
constexpr int kScalingTarget = 9;
constexpr int kScalingTrials = 5;
constexpr int kScalingRuns = 3;
constexpr double kProbs[3] = {0.2, 0.5, 0.8};

struct Outcome {
  bool pass = true;
  std::string detail;
};

SolveOptions seeded(std::uint64_t seed) {
  SolveOptions o;
  o.seed = seed;
  o.repeats = kRepeats;
  return o;
}

bool witness_ok(const Graph& g, const SolveReport& r) {
  if (!r.witness) return true;
  const auto* c = std::get_if<Coloring>(&*r.witness);
  return c != nullptr && verify_coloring(g, *c) && (r.target < 0 || c->palette_size <= r.target);
}

Outcome dual_coloring() {
  Rng rng(Rng::derive_seed(kRootSeed, 1));
  long long decisions = 0;
  long long mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(rng.uniform_below(11));
    const Graph g = gen_gnp(n, kProbs[i % 3], rng.next_u64());
    const int chi = oracle::chromatic_number_exact(g);
    for (int k = 0; k <= n; ++k) {
      const auto seed = Rng::derive_seed(kRootSeed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k));
      const auto a = solve_dual_coloring(g, k, seeded(seed));
      const auto b = solve_dual_coloring_baseline(g, k, seeded(seed));
      const bool truth = chi <= n - k;
      decisions += 2;
      if (a.decision != truth || !witness_ok(g, a)) ++mismatches;
      if (b.decision != truth || !witness_ok(g, b)) ++mismatches;
    }
  }
  return {mismatches == 0, "500 graphs, " + std::to_string(decisions) + " decisions, " + std::to_string(mismatches) + " mismatches"};
}

Outcome modulator_solver() {
  Rng rng(Rng::derive_seed(kRootSeed, 2));
  long long decisions = 0;
  long long mismatches = 0;
  auto sweep = [&](const Graph& g, const VertexSet& s, std::uint64_t tag) {
    const int theta = oracle::clique_cover_number_exact(g);
    for (int target = 1; target <= g.size(); ++target) {
      const auto r = solve_clique_cover_with_modulator(
          {g, s, target}, seeded(Rng::derive_seed(kRootSeed, tag, static_cast<std::uint64_t>(target))));
      ++decisions;
      if (r.decision != (theta <= target)) ++mismatches;
    }
  };
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng.uniform_below(10));
    const Graph g = gen_gnp(n, kProbs[i % 3], rng.next_u64());
    sweep(g, greedy_triangle_packing(g).vertices(), static_cast<std::uint64_t>(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 8 + static_cast<int>(rng.uniform_below(9));
    const int p = static_cast<int>(rng.uniform_below(9));
    const auto inst = gen_planted_comodulator(n, p, rng.next_u64(), kProbs[i % 3]);
    sweep(inst.cover_side, inst.s, 1000 + static_cast<std::uint64_t>(i));
  }
  return {mismatches == 0, "300 packing + 100 planted graphs, " + std::to_string(decisions) + " decisions, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome structural_guarantee() {
  Rng rng(Rng::derive_seed(kRootSeed, 3));
  long long mismatches = 0;
  long long bad_witness = 0;
  long long ineq_checked = 0;
  long long ineq_failed = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng.uniform_below(9));
    const Graph g = gen_gnp(n, kProbs[i % 3], rng.next_u64());
    const Graph gc = complement(g);
    const int chi = oracle::chromatic_number_exact(g);
    const int omega = oracle::clique_number_exact(g);
    const int mu_bar = oracle::maximum_matching_exact(gc);
    const int alpha = oracle::max_independent_set_exact(gc);
    const auto packing = greedy_triangle_packing(gc);
    for (int k = 1; k <= 3; ++k) {
      const auto r = solve_below_structural_guarantee(g, k, seeded(Rng::derive_seed(kRootSeed, 30 + i, k)));
      if (r.decision != (chi <= omega + mu_bar - k)) ++mismatches;
      if (r.branch == Branch::kPacking) {
        const auto& c = std::get<Coloring>(*r.witness);
        if (!verify_coloring(g, c) || c.palette_size > alpha + mu_bar - k) ++bad_witness;
      }
      if (static_cast<int>(packing.size()) > 2 * k) {
        const auto built = construct_large_packing_cover(gc, k, packing);
        ++ineq_checked;
        if (built.mu_out + built.alpha_out > alpha + mu_bar - 3 * k) ++ineq_failed;
        if (!verify_clique_cover(gc, built.cover) || static_cast<int>(built.cover.size()) > alpha + mu_bar - k)
          ++bad_witness;
      }
    }
  }
  return {mismatches == 0 && bad_witness == 0 && ineq_failed == 0 && ineq_checked > 0,
          "200 graphs x k in {1,2,3}: " + std::to_string(mismatches) + " mismatches, " + std::to_string(bad_witness) +
              " bad witnesses, inequality held on " + std::to_string(ineq_checked - ineq_failed) + "/" +
              std::to_string(ineq_checked) + " large-packing cases"};
}

Outcome algebra() {
  Rng rng(Rng::derive_seed(kRootSeed, 4));
  int pf_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int dim = 2 * (1 + static_cast<int>(rng.uniform_below(4)));
    const int p = static_cast<int>(rng.uniform_below(5));
    const auto m = random_skew(dim, p, rng, 0.7, 0.6);
    if (!(pfaffian_division_free(m) == pfaffian_bruteforce(m))) ++pf_bad;
  }
  int det_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int dim = 2 * (1 + static_cast<int>(rng.uniform_below(5)));
    SkewRingMatrix m(dim, 0);
    std::vector<std::vector<Fp>> dense(static_cast<std::size_t>(dim), std::vector<Fp>(static_cast<std::size_t>(dim)));
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b) {
        const Fp v = rng.uniform_unit() < 0.8 ? rng.uniform_fp() : Fp::zero();
        m.set(a, b, RingElement::constant(0, v));
        dense[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        dense[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -v;
      }
    const Fp pf = pfaffian_division_free(m).coefficient_at(0);
    if (!(pf * pf == bareiss_determinant(dense))) ++det_bad;
  }
  int conv_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int p = static_cast<int>(rng.uniform_below(11));
    const auto a = random_element(p, rng);
    const auto b = random_element(p, rng);
    if (!(ring_mul(a, b) == naive_convolution(a, b))) ++conv_bad;
  }
  return {pf_bad == 0 && det_bad == 0 && conv_bad == 0,
          "Pf vs matchings " + std::to_string(200 - pf_bad) + "/200, Pf^2 = det " + std::to_string(200 - det_bad) +
              "/200, fast vs naive convolution " + std::to_string(100 - conv_bad) + "/100"};
}

Outcome scaling() {
  const auto records = bench_scaling({8, 9, 10, 11, 12, 13}, kScalingN, kScalingTrials, kRootSeed, kScalingTarget,
                                     SolveOptions{}, kScalingRuns);
  const auto medians = median_by_p(records);
  int in_range = 0;
  std::string detail = "n=22 target=9 medians(ms):";
  char buf[64];
  for (std::size_t i = 0; i < medians.size(); ++i) {
    std::snprintf(buf, sizeof buf, " p%d=%.1f", medians[i].first, medians[i].second);
    detail += buf;
  }
  detail += " ratios:";
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i].second / medians[i - 1].second;
    if (ratio >= kRatioLow && ratio <= kRatioHigh) ++in_range;
    std::snprintf(buf, sizeof buf, " %.2f", ratio);
    detail += buf;
  }
  detail += " (" + std::to_string(in_range) + "/5 in [1.5, 3.0])";
  return {in_range >= kRatiosRequired, detail};
}

Outcome reduction() {
  int failures = 0;
  int instances = 0;
  auto check = [&](const ColoredCliqueInstance& inst) {
    ++instances;
    const auto r = build_reduction(inst);
    const bool shape = r.graph.size() == 2 * inst.k * inst.n + 2 && r.target == inst.k * (inst.n - 1) + 2 &&
                       is_perfect_matching(r.graph, canonical_perfect_matching(r));
    if (!shape || !verify_equivalence_small(inst)) ++failures;
  };
  const Edge cross[4] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (unsigned mask = 0; mask < 16; ++mask) {
    ColoredCliqueInstance inst{2, 2, {}};
    for (int b = 0; b < 4; ++b)
      if (mask >> b & 1) inst.edges.push_back(cross[b]);
    check(inst);
  }
  Rng rng(Rng::derive_seed(kRootSeed, 6));
  for (int i = 0; i < 50; ++i) check(random_colored_clique_instance(3, 2, kProbs[i % 3], rng.next_u64()));
  return {failures == 0, std::to_string(instances - failures) + "/" + std::to_string(instances) +
                             " instances (16 exhaustive k=2 n=2, 50 random k=3 n=2)"};
}

Outcome structural_inequalities() {
  Rng rng(Rng::derive_seed(kRootSeed, 7));
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform_below(12));
    const Graph g = gen_gnp(n, kProbs[i % 3], rng.next_u64());
    const int omega = oracle::clique_number_exact(g);
    const int mu_bar = oracle::maximum_matching_exact(complement(g));
    const auto col = guarantee_witness_coloring(g);
    const bool ok = omega + mu_bar <= n && oracle::max_independent_set_exact(g) <= oracle::clique_cover_number_exact(g) &&
                    verify_coloring(g, col) && col.palette_size <= omega + mu_bar;
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(500 - failures) + "/500 graphs satisfy omega+mu_bar<=n, alpha<=theta, "
                                                          "guarantee coloring within omega+mu_bar"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"dual-coloring correctness", dual_coloring},
      {"modulator-solver correctness", modulator_solver},
      {"structural-guarantee correctness", structural_guarantee},
      {"algebra oracles", algebra},
      {"empirical 2^p scaling", scaling},
      {"reduction equivalence", reduction},
      {"structural inequalities", structural_inequalities},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
