#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bgcolor/sqring.hpp"

namespace bgcolor {

/// Skew-symmetric matrix with squarefree-ring entries. Setting (i, j) also
/// sets (j, i) to the negation, so the invariant holds by construction.
class SkewRingMatrix {
 public:
  SkewRingMatrix(int dim, int p);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int variables() const { return p_; }
  [[nodiscard]] const RingElement& at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, const RingElement& value);
  /// Raw write of a single cell, for building deliberately invalid inputs.
  void set_unchecked(int i, int j, RingElement value) { entries_[index(i, j)] = std::move(value); }

  /// Skew-symmetry, zero diagonal, and even dimension.
  [[nodiscard]] bool is_valid() const;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const;

  int dim_;
  int p_;
  std::vector<RingElement> entries_;
};

/// Signed sum over perfect matchings, with the sign of the flattened
/// permutation (i1 j1 i2 j2 ...), i_k < j_k, i_1 < i_2 < ... . Pf of the
/// 0x0 matrix is 1.
///
/// Evaluated per subset X of the variables in the ranked domain: skew
/// elimination over F[z]/(z^{p+1}) when unit pivots exist, else the
/// division-free clow recurrence. Parallel over X. Throws
/// std::invalid_argument on non-skew or odd-dimension input.
[[nodiscard]] RingElement pfaffian(const SkewRingMatrix& m);

/// Division-free alternating-clow-sequence recurrence over R, O(dim^4)
/// ring multiplications.
[[nodiscard]] RingElement pfaffian_division_free(const SkewRingMatrix& m);

/// Skew Gaussian elimination over R with unit pivots; nullopt when at some
/// step no entry of the remaining matrix is a unit.
[[nodiscard]] std::optional<RingElement> pfaffian_elimination(const SkewRingMatrix& m);

/// Direct enumeration of perfect matchings; dim <= 12.
[[nodiscard]] RingElement pfaffian_bruteforce(const SkewRingMatrix& m);

namespace kernels {

/// Pfaffian of a dim x dim skew matrix over F[z]/(z^L), stored row-major
/// with L coefficients per cell. `work` is clobbered. Returns false, leaving
/// `out` untouched, when elimination runs out of unit pivots.
bool trunc_pfaffian_elimination(std::span<Fp> work, int dim, int L, Fp* out);

/// Division-free clow recurrence over F[z]/(z^L); always succeeds.
void trunc_pfaffian_clow(std::span<const Fp> matrix, int dim, int L, Fp* out);

/// Elimination with clow fallback. `matrix` is preserved, `work` is scratch
/// of the same size.
void trunc_pfaffian(std::span<const Fp> matrix, std::span<Fp> work, int dim, int L, Fp* out);

}  // namespace kernels

}  // namespace bgcolor
