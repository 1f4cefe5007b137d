#include "bgcolor/generators.hpp"

#include <utility>
#include <stdexcept>
#include <vector>

#include "bgcolor/field.hpp"

namespace bgcolor {

namespace {

void check_prob(double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph gen_gnp(int n, double prob, std::uint64_t seed) {
  check_prob(prob);
  if (n < 0) throw std::invalid_argument("gen_gnp: negative vertex count");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform_unit() < prob) g.add_edge(u, v);
  return g;
}

PlantedInstance gen_planted_comodulator(int n, int p_mod, std::uint64_t seed, double prob, bool balanced) {
  check_prob(prob);
  if (p_mod < 0 || p_mod > n) throw std::invalid_argument("gen_planted_comodulator: need 0 <= p_mod <= n");
  Rng rng(seed);
  const int base = n - p_mod;
  std::vector<int> side(static_cast<std::size_t>(base));
  if (balanced) {
    for (int v = 0; v < base; ++v) side[static_cast<std::size_t>(v)] = v % 2;
    for (int i = base - 1; i > 0; --i)
      std::swap(side[static_cast<std::size_t>(i)], side[rng.uniform_below(static_cast<std::uint64_t>(i) + 1)]);
  } else {
    for (auto& s : side) s = static_cast<int>(rng.uniform_below(2));
  }

  PlantedInstance out;
  out.cover_side = Graph(n);
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v)
      if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && rng.uniform_unit() < prob)
        out.cover_side.add_edge(u, v);
  for (int m = base; m < n; ++m) {
    out.s.push_back(m);
    for (int v = 0; v < m; ++v)
      if (rng.uniform_unit() < prob) out.cover_side.add_edge(v, m);
  }
  out.coloring_side = complement(out.cover_side);
  return out;
}

}  // namespace bgcolor
