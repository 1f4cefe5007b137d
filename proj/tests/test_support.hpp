#pragma once

// Test-only oracles and generators. Everything here is written
// independently of the library's algorithmic paths.

#include <cstdint>
#include <vector>

#include "bgcolor/field.hpp"
#include "bgcolor/graph.hpp"
#include "bgcolor/pfaffian.hpp"
#include "bgcolor/sqring.hpp"

namespace bgcolor::testing {

/// O(4^p) double loop over pairs of disjoint subsets.
inline RingElement naive_convolution(const RingElement& a, const RingElement& b) {
  RingElement out(a.variables());
  const Subset n = static_cast<Subset>(a.size());
  for (Subset x = 0; x < n; ++x)
    for (Subset y = 0; y < n; ++y)
      if ((x & y) == 0) out.set_coefficient(x | y, out.coefficient_at(x | y) + a.coefficient_at(x) * b.coefficient_at(y));
  return out;
}

inline RingElement random_element(int p, Rng& rng, double density = 1.0) {
  RingElement e(p);
  for (Subset t = 0; t < e.size(); ++t)
    if (rng.uniform_unit() < density) e.set_coefficient(t, rng.uniform_fp());
  return e;
}

inline SkewRingMatrix random_skew(int dim, int p, Rng& rng, double entry_density, double coeff_density) {
  SkewRingMatrix m(dim, p);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (rng.uniform_unit() < entry_density) m.set(i, j, random_element(p, rng, coeff_density));
  return m;
}

/// Determinant over F by Bareiss fraction-free elimination with row pivoting.
inline Fp bareiss_determinant(std::vector<std::vector<Fp>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Fp::one();
  Fp prev = Fp::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Fp::zero();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    const Fp prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) * prev_inv;
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

inline Graph random_graph(int n, double prob, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform_unit() < prob) g.add_edge(u, v);
  return g;
}

}  // namespace bgcolor::testing
