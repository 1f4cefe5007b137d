#include "bgcolor/kernels.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace bgcolor::kernels {
namespace {

std::size_t subsets(int p) { return std::size_t{1} << p; }

// Index of the i-th subset containing `bit` (i ranges over 2^(p-1)).
std::size_t with_bit(std::size_t i, std::size_t bit) {
  const std::size_t low = i & (bit - 1);
  return ((i - low) << 1) | bit | low;
}

}  // namespace

void ranked_zeta(std::span<const Fp> coeffs, int p, std::span<Fp> ranked, Exec exec) {
  const std::size_t N = subsets(p);
  const std::size_t L = static_cast<std::size_t>(p) + 1;
  if (coeffs.size() != N || ranked.size() != N * L) throw std::invalid_argument("ranked_zeta: size mismatch");
  const bool par = exec == Exec::kParallel;
  const auto sN = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t x = 0; x < sN; ++x) {
    Fp* block = ranked.data() + static_cast<std::size_t>(x) * L;
    for (std::size_t r = 0; r < L; ++r) block[r] = Fp::zero();
    block[std::popcount(static_cast<std::uint64_t>(x))] = coeffs[static_cast<std::size_t>(x)];
  }
  const auto half = static_cast<std::int64_t>(N / 2);
  for (int b = 0; b < p; ++b) {
    const std::size_t bit = std::size_t{1} << b;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < half; ++i) {
      const std::size_t x = with_bit(static_cast<std::size_t>(i), bit);
      Fp* hi = ranked.data() + x * L;
      const Fp* lo = ranked.data() + (x ^ bit) * L;
      // Ranks above popcount(x) stay zero.
      const std::size_t top = static_cast<std::size_t>(std::popcount(x));
      for (std::size_t r = 0; r < top; ++r) hi[r] += lo[r];
    }
  }
}

void ranked_mobius_project(std::span<Fp> ranked, int p, std::span<Fp> coeffs, Exec exec) {
  const std::size_t N = subsets(p);
  const std::size_t L = static_cast<std::size_t>(p) + 1;
  if (coeffs.size() != N || ranked.size() != N * L) throw std::invalid_argument("ranked_mobius_project: size mismatch");
  const bool par = exec == Exec::kParallel;
  const auto half = static_cast<std::int64_t>(N / 2);
  for (int b = 0; b < p; ++b) {
    const std::size_t bit = std::size_t{1} << b;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < half; ++i) {
      const std::size_t x = with_bit(static_cast<std::size_t>(i), bit);
      Fp* hi = ranked.data() + x * L;
      const Fp* lo = ranked.data() + (x ^ bit) * L;
      for (std::size_t r = 0; r < L; ++r) hi[r] -= lo[r];
    }
  }
  const auto sN = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t x = 0; x < sN; ++x)
    coeffs[static_cast<std::size_t>(x)] =
        ranked[static_cast<std::size_t>(x) * L + static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(x)))];
}

void ranked_pointwise_mul(std::span<const Fp> a, std::span<const Fp> b, int p, std::span<Fp> out, Exec exec) {
  const std::size_t N = subsets(p);
  const std::size_t L = static_cast<std::size_t>(p) + 1;
  if (a.size() != N * L || b.size() != N * L || out.size() != N * L)
    throw std::invalid_argument("ranked_pointwise_mul: size mismatch");
  const bool par = exec == Exec::kParallel;
  const auto sN = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t x = 0; x < sN; ++x) {
    const std::size_t off = static_cast<std::size_t>(x) * L;
    trunc_mul(a.data() + off, b.data() + off, out.data() + off, static_cast<int>(L));
  }
}

}  // namespace bgcolor::kernels
