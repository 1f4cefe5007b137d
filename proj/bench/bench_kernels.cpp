// Serial reference vs OpenMP kernels, and the ring vs ranked solver engines.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "bgcolor/generators.hpp"
#include "bgcolor/modsolve.hpp"
#include "bgcolor/sqring.hpp"

namespace {

using namespace bgcolor;

RingElement random_element(int p, Rng& rng) {
  RingElement e(p);
  for (Subset t = 0; t < e.size(); ++t) e.set_coefficient(t, rng.uniform_fp());
  return e;
}

void BM_RingMulReference(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto a = random_element(p, rng);
  const auto b = random_element(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reference::ring_mul(a, b));
}

void BM_RingMulParallel(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto a = random_element(p, rng);
  const auto b = random_element(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(a, b));
}

struct EngineCase {
  CliqueTable table;
  AuxGraph aux;
};

// U covers all of S-bar, so the auxiliary graph always has a perfect matching.
EngineCase engine_case(int p) {
  const auto inst = gen_planted_comodulator(16, p, 7, 0.5, true);
  VertexSet sbar;
  for (int v = 0; v < 16 - p; ++v) sbar.push_back(v);
  return {build_clique_table(inst.cover_side, inst.s), build_aux_graph(inst.cover_side, sbar, 16 - p)};
}

void BM_Engine(benchmark::State& state, Engine engine) {
  const int p = static_cast<int>(state.range(0));
  const auto c = engine_case(p);
  for (auto _ : state) benchmark::DoNotOptimize(full_monomial_coefficients(c.table, c.aux, 2, 11, engine));
}

}  // namespace

BENCHMARK(BM_RingMulReference)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RingMulParallel)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Engine, ring, Engine::kRing)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Engine, ranked, Engine::kRanked)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
