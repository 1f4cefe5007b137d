#pragma once

// Arithmetic modulo the Mersenne prime q = 2^61 - 1 and the seeded generator
// that feeds every random evaluation in the library.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace bgcolor {

class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  /// Reduces `v` modulo q.
  constexpr explicit Fp(std::uint64_t v) : value_(reduce_word(v)) {}

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return Fp(1); }
  /// Wraps a value already known to lie in [0, q).
  static constexpr Fp from_reduced(std::uint64_t v) {
    Fp r;
    r.value_ = v;
    return r;
  }
  static constexpr Fp from_signed(std::int64_t v) {
    return v >= 0 ? Fp(static_cast<std::uint64_t>(v))
                  : -Fp(static_cast<std::uint64_t>(-(v + 1)) + 1);
  }

  [[nodiscard]] constexpr std::uint64_t value() const { return value_; }
  [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= kModulus) s -= kModulus;
    return from_reduced(s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return from_reduced(a.value_ >= b.value_ ? a.value_ - b.value_
                                             : a.value_ + kModulus - b.value_);
  }
  constexpr Fp operator-() const {
    return from_reduced(value_ == 0 ? 0 : kModulus - value_);
  }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return from_reduced(reduce_wide(static_cast<unsigned __int128>(a.value_) * b.value_));
  }
  constexpr Fp& operator+=(Fp b) { return *this = *this + b; }
  constexpr Fp& operator-=(Fp b) { return *this = *this - b; }
  constexpr Fp& operator*=(Fp b) { return *this = *this * b; }
  friend constexpr bool operator==(Fp a, Fp b) = default;

  [[nodiscard]] constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = one();
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Multiplicative inverse via Fermat; throws on zero.
  [[nodiscard]] Fp inverse() const {
    if (is_zero()) throw std::domain_error("Fp: inverse of zero");
    return pow(kModulus - 2);
  }

  /// Reduces a 128-bit accumulator (any value < 2^128) modulo q.
  static constexpr std::uint64_t reduce_wide(unsigned __int128 x) {
    // 2^61 == 1 (mod q), so fold 61-bit limbs.
    std::uint64_t lo = static_cast<std::uint64_t>(x) & kModulus;
    std::uint64_t mid = static_cast<std::uint64_t>(x >> 61) & kModulus;
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 122);
    std::uint64_t s = lo + mid + hi;  // < 3q, no overflow
    s = (s & kModulus) + (s >> 61);
    if (s >= kModulus) s -= kModulus;
    return s;
  }

 private:
  static constexpr std::uint64_t reduce_word(std::uint64_t v) {
    v = (v & kModulus) + (v >> 61);
    if (v >= kModulus) v -= kModulus;
    return v;
  }

  std::uint64_t value_ = 0;
};

/// SplitMix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic generator. Single owner: parallel code derives children
/// with `derive` instead of sharing one instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform over [0, q) by rejection on the top 61 bits.
  Fp uniform_fp() {
    for (;;) {
      std::uint64_t x = engine_() >> 3;
      if (x < Fp::kModulus) return Fp::from_reduced(x);
    }
  }

  /// Uniform double in [0, 1).
  double uniform_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

  static std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(root ^ mix64(a)) ^ mix64(b + 0x632be59bd9b4e019ULL));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace bgcolor
