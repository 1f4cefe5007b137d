#include "bgcolor/sqring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "bgcolor/errors.hpp"
#include "bgcolor/kernels.hpp"

namespace bgcolor {
namespace {

std::size_t checked_size(int p) {
  if (p < 0) throw std::invalid_argument("RingElement: negative variable count");
  if (p > kMaxRingVariables)
    throw GuardError("RingElement: " + std::to_string(p) + " variables exceeds the limit of " +
                     std::to_string(kMaxRingVariables));
  return std::size_t{1} << p;
}

}  // namespace

RingElement::RingElement(int p) : p_(p), coeffs_(checked_size(p)) {}

RingElement::RingElement(int p, std::vector<Fp> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != checked_size(p)) throw std::invalid_argument("RingElement: coefficient count must be 2^p");
}

RingElement RingElement::identity(int p) { return constant(p, Fp::one()); }

RingElement RingElement::constant(int p, Fp c) {
  RingElement e(p);
  e.coeffs_[0] = c;
  return e;
}

RingElement RingElement::variable(int p, int v) {
  if (v < 0 || v >= p) throw std::invalid_argument("RingElement::variable: index out of range");
  RingElement e(p);
  e.coeffs_[Subset{1} << v] = Fp::one();
  return e;
}

RingElement RingElement::from_sparse_terms(int p, std::span<const std::pair<Subset, Fp>> terms) {
  RingElement e(p);
  for (const auto& [t, c] : terms) {
    if (t >= e.size()) throw std::invalid_argument("from_sparse_terms: subset out of range");
    e.coeffs_[t] += c;
  }
  return e;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Fp c) { return c.is_zero(); });
}

void RingElement::check_compatible(const RingElement& b) const {
  if (p_ != b.p_) throw std::invalid_argument("RingElement: mismatched variable counts");
}

RingElement& RingElement::operator+=(const RingElement& b) {
  check_compatible(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& b) {
  check_compatible(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(Fp c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }

RingElement RingElement::inverse() const {
  if (!is_unit()) throw std::domain_error("RingElement::inverse: constant term is zero");
  const Fp c_inv = coeffs_[0].inverse();
  // x = 1 - a/c is nilpotent of index <= p + 1, so 1/a = c^{-1} * sum_{k<=p} x^k.
  RingElement x = (*this) * (-c_inv);
  x.coeffs_[0] = Fp::zero();
  RingElement sum = identity(p_);
  RingElement power = identity(p_);
  for (int k = 1; k <= p_; ++k) {
    power = ring_mul(power, x);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c_inv;
}

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("ring_mul: mismatched variable counts");
  const int p = a.variables();
  const std::size_t ranked_size = a.size() * (static_cast<std::size_t>(p) + 1);
  std::vector<Fp> ha(ranked_size);
  std::vector<Fp> hb(ranked_size);
  std::vector<Fp> prod(ranked_size);
  kernels::ranked_zeta(a.coefficients(), p, ha);
  kernels::ranked_zeta(b.coefficients(), p, hb);
  kernels::ranked_pointwise_mul(ha, hb, p, prod);
  RingElement out(p);
  kernels::ranked_mobius_project(prod, p, out.coefficients());
  return out;
}

namespace reference {

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("ring_mul: mismatched variable counts");
  const int p = a.variables();
  const std::size_t N = a.size();
  // fa[r][X] = sum over A subset X with |A| = r of a(A)
  auto zeta = [&](const RingElement& e) {
    std::vector<std::vector<Fp>> f(static_cast<std::size_t>(p) + 1, std::vector<Fp>(N));
    for (Subset x = 0; x < N; ++x) f[static_cast<std::size_t>(std::popcount(x))][x] = e.coefficient_at(x);
    for (auto& level : f)
      for (int b = 0; b < p; ++b)
        for (Subset x = 0; x < N; ++x)
          if (x >> b & 1U) level[x] += level[x ^ (Subset{1} << b)];
    return f;
  };
  const auto fa = zeta(a);
  const auto fb = zeta(b);
  RingElement out(p);
  for (int r = 0; r <= p; ++r) {
    std::vector<Fp> h(N);
    for (Subset x = 0; x < N; ++x)
      for (int i = 0; i <= r; ++i)
        h[x] += fa[static_cast<std::size_t>(i)][x] * fb[static_cast<std::size_t>(r - i)][x];
    for (int b = 0; b < p; ++b)
      for (Subset x = 0; x < N; ++x)
        if (x >> b & 1U) h[x] -= h[x ^ (Subset{1} << b)];
    for (Subset x = 0; x < N; ++x)
      if (std::popcount(x) == r) out.set_coefficient(x, h[x]);
  }
  return out;
}

}  // namespace reference

}  // namespace bgcolor
