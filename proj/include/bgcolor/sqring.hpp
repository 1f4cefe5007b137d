#pragma once

// The squarefree ring R = F[y_0..y_{p-1}] / <y_v^2>. An element is a dense
// vector of 2^p coefficients; the entry at bitmask T is the coefficient of
// the monomial prod_{v in T} y_v. Multiplication is disjoint-union subset
// convolution.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bgcolor/field.hpp"

namespace bgcolor {

using Subset = std::uint32_t;

/// Largest supported variable count (2^24 coefficients, 128 MiB per element).
inline constexpr int kMaxRingVariables = 24;

class RingElement {
 public:
  RingElement() : coeffs_(1) {}
  /// The zero element on `p` variables; throws GuardError when p > 24.
  explicit RingElement(int p);
  RingElement(int p, std::vector<Fp> coeffs);

  static RingElement zero(int p) { return RingElement(p); }
  static RingElement identity(int p);
  static RingElement constant(int p, Fp c);
  static RingElement variable(int p, int v);
  /// Dense element with the listed coefficients; duplicate subsets are summed.
  static RingElement from_sparse_terms(int p, std::span<const std::pair<Subset, Fp>> terms);

  [[nodiscard]] int variables() const { return p_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] Subset full_set() const { return static_cast<Subset>(coeffs_.size() - 1); }
  [[nodiscard]] std::span<const Fp> coefficients() const { return coeffs_; }
  [[nodiscard]] std::span<Fp> coefficients() { return coeffs_; }

  [[nodiscard]] Fp coefficient_at(Subset t) const { return coeffs_.at(t); }
  void set_coefficient(Subset t, Fp c) { coeffs_.at(t) = c; }

  [[nodiscard]] bool is_zero() const;
  /// Units are exactly the elements with a nonzero constant term; the rest is nilpotent.
  [[nodiscard]] bool is_unit() const { return !coeffs_[0].is_zero(); }
  /// Inverse of a unit via the truncated geometric series c^{-1} sum_{k<=p} (-n/c)^k.
  [[nodiscard]] RingElement inverse() const;

  RingElement& operator+=(const RingElement& b);
  RingElement& operator-=(const RingElement& b);
  RingElement& operator*=(Fp c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, Fp c) { return a *= c; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  void check_compatible(const RingElement& b) const;

  int p_ = 0;
  std::vector<Fp> coeffs_;
};

[[nodiscard]] RingElement ring_add(const RingElement& a, const RingElement& b);
/// Fast subset convolution through ranked zeta / pointwise / ranked Mobius;
/// O(2^p p^2) field operations, parallel over subsets.
[[nodiscard]] RingElement ring_mul(const RingElement& a, const RingElement& b);
[[nodiscard]] inline Fp coefficient_at(const RingElement& a, Subset t) { return a.coefficient_at(t); }

namespace reference {
/// Serial rank-major fast subset convolution, kept to check the parallel kernel.
[[nodiscard]] RingElement ring_mul(const RingElement& a, const RingElement& b);
}  // namespace reference

}  // namespace bgcolor
