#pragma once

// Data-parallel kernels over the 2^p subsets of the modulator.
//
// "Ranked" layout: a block of L = p + 1 field elements per subset X
// (X-major). Slot r of X holds the rank-r part of the ranked zeta transform,
// i.e. the sum of f(A) over A subset of X with |A| = r. Equivalently, slot r
// is the z^r coefficient of f evaluated at y_v = z * [v in X]; products of
// such blocks are truncated polynomial products in z.

#include <cstddef>
#include <span>

#include "bgcolor/field.hpp"

namespace bgcolor::kernels {

enum class Exec { kSerial, kParallel };

/// Writes the ranked zeta transform of `coeffs` (length 2^p) into `ranked`
/// (length 2^p * (p + 1)).
void ranked_zeta(std::span<const Fp> coeffs, int p, std::span<Fp> ranked, Exec exec = Exec::kParallel);

/// Inverts ranked_zeta in place and keeps, for every T, the slot of rank |T|.
void ranked_mobius_project(std::span<Fp> ranked, int p, std::span<Fp> coeffs, Exec exec = Exec::kParallel);

/// out[X] = a[X] * b[X] as polynomials truncated at degree p, for all X.
void ranked_pointwise_mul(std::span<const Fp> a, std::span<const Fp> b, int p, std::span<Fp> out,
                          Exec exec = Exec::kParallel);

// ---- truncated polynomial primitives (length-L coefficient blocks) ----

/// out = a * b mod z^L. `out` must not alias `a` or `b`.
inline void trunc_mul(const Fp* a, const Fp* b, Fp* out, int L) {
  for (int k = 0; k < L; ++k) {
    unsigned __int128 acc = 0;
    for (int i = 0; i <= k; ++i) acc += static_cast<unsigned __int128>(a[i].value()) * b[k - i].value();
    out[k] = Fp::from_reduced(Fp::reduce_wide(acc));
  }
}

/// acc -= a * b mod z^L, lazily reduced; `acc` must not alias `a` or `b`.
inline void trunc_mul_sub(const Fp* a, const Fp* b, Fp* acc, int L) {
  for (int k = 0; k < L; ++k) {
    unsigned __int128 s = 0;
    for (int i = 0; i <= k; ++i) s += static_cast<unsigned __int128>(a[i].value()) * b[k - i].value();
    acc[k] -= Fp::from_reduced(Fp::reduce_wide(s));
  }
}

/// out = a^{-1} mod z^L; requires a[0] != 0.
inline void trunc_inverse(const Fp* a, Fp* out, int L) {
  const Fp inv0 = a[0].inverse();
  out[0] = inv0;
  for (int k = 1; k < L; ++k) {
    unsigned __int128 s = 0;
    for (int i = 1; i <= k; ++i) s += static_cast<unsigned __int128>(a[i].value()) * out[k - i].value();
    out[k] = -(Fp::from_reduced(Fp::reduce_wide(s)) * inv0);
  }
}

}  // namespace bgcolor::kernels
