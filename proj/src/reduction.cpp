#include "bgcolor/reduction.hpp"

#include <stdexcept>
#include <string>

#include "bgcolor/errors.hpp"
#include "bgcolor/field.hpp"
#include "bgcolor/oracle.hpp"

namespace bgcolor {

ReducedInstance build_reduction(const ColoredCliqueInstance& inst) {
  const int k = inst.k;
  const int n = inst.n;
  if (k < 1 || n < 1) throw std::invalid_argument("build_reduction: need k >= 1 and n >= 1");
  ReducedInstance r;
  r.k = k;
  r.n = n;
  const int total = 2 * k * n + 2;
  r.graph = Graph(total);
  r.target = k * (n - 1) + 2;

  for (auto [a, b] : inst.edges) {
    if (a < 0 || b < 0 || a >= k * n || b >= k * n) throw std::invalid_argument("build_reduction: vertex out of range");
    if (a / n == b / n) throw std::invalid_argument("build_reduction: edge inside part " + std::to_string(a / n + 1));
    r.graph.add_edge(a, b);
  }
  for (int i = 0; i < k + 2; ++i)
    for (int j = i + 1; j < k + 2; ++j) r.graph.add_edge(r.u(i), r.u(j));
  for (int i = 0; i < k; ++i) {
    r.graph.add_edge(r.u(i), r.v(i, 0));
    for (int j = 0; j + 1 < n; ++j) {
      r.graph.add_edge(r.w(i, j), r.v(i, j));
      r.graph.add_edge(r.w(i, j), r.v(i, j + 1));
    }
  }

  r.labels.resize(static_cast<std::size_t>(total));
  auto name = [](char c, int i, int j) { return std::string(1, c) + std::to_string(i + 1) + "," + std::to_string(j + 1); };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) r.labels[static_cast<std::size_t>(r.v(i, j))] = name('v', i, j);
    for (int j = 0; j + 1 < n; ++j) r.labels[static_cast<std::size_t>(r.w(i, j))] = name('w', i, j);
  }
  for (int i = 0; i < k + 2; ++i) r.labels[static_cast<std::size_t>(r.u(i))] = "u" + std::to_string(i + 1);
  return r;
}

Matching canonical_perfect_matching(const ReducedInstance& r) {
  Matching m;
  for (int i = 0; i < r.k; ++i) {
    m.edges.emplace_back(r.v(i, 0), r.u(i));
    for (int j = 0; j + 1 < r.n; ++j) m.edges.emplace_back(r.v(i, j + 1), r.w(i, j));
  }
  m.edges.emplace_back(r.u(r.k), r.u(r.k + 1));
  return m;
}

ColoredCliqueInstance random_colored_clique_instance(int k, int n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  ColoredCliqueInstance inst{k, n, {}};
  for (int a = 0; a < k * n; ++a)
    for (int b = a + 1; b < k * n; ++b)
      if (a / n != b / n && rng.uniform_unit() < prob) inst.edges.emplace_back(a, b);
  return inst;
}

bool has_colored_clique(const ColoredCliqueInstance& inst) {
  if (inst.k < 1 || inst.n < 1) return false;
  Graph g(inst.k * inst.n);
  for (auto [a, b] : inst.edges) g.add_edge(a, b);
  std::vector<int> pick(static_cast<std::size_t>(inst.k), 0);
  // Odometer over one vertex per part.
  while (true) {
    bool clique = true;
    for (int a = 0; a < inst.k && clique; ++a)
      for (int b = a + 1; b < inst.k && clique; ++b)
        clique = g.adjacent(inst.label(a, pick[static_cast<std::size_t>(a)]), inst.label(b, pick[static_cast<std::size_t>(b)]));
    if (clique) return true;
    int pos = 0;
    while (pos < inst.k && ++pick[static_cast<std::size_t>(pos)] == inst.n) pick[static_cast<std::size_t>(pos++)] = 0;
    if (pos == inst.k) return false;
  }
}

bool verify_equivalence_small(const ColoredCliqueInstance& inst) {
  const int total = 2 * inst.k * inst.n + 2;
  if (total > kMaxEquivalenceVertices)
    throw GuardError("verify_equivalence_small: reduced graph has " + std::to_string(total) + " vertices, limit " +
                     std::to_string(kMaxEquivalenceVertices));
  const ReducedInstance r = build_reduction(inst);
  return has_colored_clique(inst) == (oracle::clique_cover_number_exact(r.graph) <= r.target);
}

}  // namespace bgcolor
