#include "bgcolor/pfaffian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bgcolor/errors.hpp"
#include "bgcolor/kernels.hpp"

namespace bgcolor {

SkewRingMatrix::SkewRingMatrix(int dim, int p)
    : dim_(dim), p_(p), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), RingElement(p)) {
  if (dim < 0) throw std::invalid_argument("SkewRingMatrix: negative dimension");
}

std::size_t SkewRingMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("SkewRingMatrix: index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
}

void SkewRingMatrix::set(int i, int j, const RingElement& value) {
  if (i == j) throw std::invalid_argument("SkewRingMatrix: diagonal must stay zero");
  if (value.variables() != p_) throw std::invalid_argument("SkewRingMatrix: entry has wrong variable count");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = -value;
}

bool SkewRingMatrix::is_valid() const {
  if (dim_ % 2 != 0) return false;
  for (int i = 0; i < dim_; ++i) {
    if (at(i, i).variables() != p_ || !at(i, i).is_zero()) return false;
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j).variables() != p_ || at(j, i) != -at(i, j)) return false;
  }
  return true;
}

namespace {

void require_valid(const SkewRingMatrix& m) {
  if (m.dim() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (!m.is_valid()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
}

// Arithmetic adapters for the clow recurrence.
struct RingOps {
  using Value = RingElement;
  int p;
  [[nodiscard]] Value zero() const { return RingElement(p); }
  [[nodiscard]] Value one() const { return RingElement::identity(p); }
  static bool is_zero(const Value& x) { return x.is_zero(); }
  static void add(Value& acc, const Value& x) { acc += x; }
  static void sub(Value& acc, const Value& x) { acc -= x; }
  static void add_mul(Value& acc, const Value& a, const Value& b) { acc += ring_mul(a, b); }
};

struct TruncOps {
  using Value = std::vector<Fp>;
  int L;
  [[nodiscard]] Value zero() const { return Value(static_cast<std::size_t>(L)); }
  [[nodiscard]] Value one() const {
    Value v(static_cast<std::size_t>(L));
    v[0] = Fp::one();
    return v;
  }
  static bool is_zero(const Value& x) {
    return std::all_of(x.begin(), x.end(), [](Fp c) { return c.is_zero(); });
  }
  static void add(Value& acc, const Value& x) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += x[k];
  }
  static void sub(Value& acc, const Value& x) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= x[k];
  }
  static void add_mul(Value& acc, const Value& a, const Value& b) {
    const int L = static_cast<int>(acc.size());
    for (int k = 0; k < L; ++k) {
      unsigned __int128 s = 0;
      for (int i = 0; i <= k; ++i)
        s += static_cast<unsigned __int128>(a[static_cast<std::size_t>(i)].value()) * b[static_cast<std::size_t>(k - i)].value();
      acc[static_cast<std::size_t>(k)] += Fp::from_reduced(Fp::reduce_wide(s));
    }
  }
};

// Alternating clow sequences. A clow with head h walks h -> c1 -> c2 -> ...
// -> h through vertices > h, alternating an A-step (weight A[c][c']) with a
// B-step (weight +1 if c' > c else -1), and closes with a B-step back to h.
// Each clow carries sign -1 and the closing B-step contributes -1, so
// closing is weight +1. Summed over sequences with increasing heads and total
// length dim, non-matching walks cancel and the Pfaffian remains.
template <class Ops, class Entry>
typename Ops::Value clow_pfaffian(const Ops& ops, int n, const Entry& entry) {
  using Value = typename Ops::Value;
  const auto un = static_cast<std::size_t>(n) + 1;
  auto at = [un](std::vector<Value>& layer, int h, int c) -> Value& {
    return layer[static_cast<std::size_t>(h) * un + static_cast<std::size_t>(c)];
  };
  // need_a[h][c]: walk at c expecting an A-step; need_b[h][c]: expecting a B-step.
  std::vector<Value> need_a(un * un, ops.zero());
  std::vector<Value> need_b(un * un, ops.zero());
  for (int h = 0; h < n; ++h) at(need_a, h, h) = ops.one();
  for (int len = 0; len < n; ++len) {
    std::vector<Value> next_a(un * un, ops.zero());
    std::vector<Value> next_b(un * un, ops.zero());
    for (int h = 0; h < n; ++h) {
      for (int c = h; c < n; ++c) {
        const Value& wa = at(need_a, h, c);
        if (!Ops::is_zero(wa)) {
          for (int c2 = h + 1; c2 < n; ++c2)
            if (c2 != c) Ops::add_mul(at(next_b, h, c2), wa, entry(c, c2));
        }
        const Value& wb = at(need_b, h, c);
        if (!Ops::is_zero(wb)) {
          for (int c2 = h + 1; c2 < n; ++c2) {
            if (c2 == c) continue;
            if (c2 > c) Ops::add(at(next_a, h, c2), wb);
            else Ops::sub(at(next_a, h, c2), wb);
          }
          for (int h2 = h + 1; h2 <= n; ++h2) Ops::add(at(next_a, h2, h2), wb);
        }
      }
    }
    need_a = std::move(next_a);
    need_b = std::move(next_b);
  }
  return std::move(at(need_a, n, n));
}

RingElement bruteforce_rec(const SkewRingMatrix& m, std::vector<int>& rest) {
  if (rest.empty()) return RingElement::identity(m.variables());
  const int i = rest.front();
  RingElement total(m.variables());
  for (std::size_t idx = 1; idx < rest.size(); ++idx) {
    const int j = rest[idx];
    if (m.at(i, j).is_zero()) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != idx) sub.push_back(rest[t]);
    RingElement term = ring_mul(m.at(i, j), bruteforce_rec(m, sub));
    // Moving j next to i passes idx - 1 elements.
    if ((idx - 1) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace

RingElement pfaffian_bruteforce(const SkewRingMatrix& m) {
  require_valid(m);
  if (m.dim() > 12) throw GuardError("pfaffian_bruteforce: dimension above 12");
  std::vector<int> all(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  return bruteforce_rec(m, all);
}

RingElement pfaffian_division_free(const SkewRingMatrix& m) {
  require_valid(m);
  if (m.dim() == 0) return RingElement::identity(m.variables());
  return clow_pfaffian(RingOps{m.variables()}, m.dim(), [&m](int i, int j) -> const RingElement& { return m.at(i, j); });
}

std::optional<RingElement> pfaffian_elimination(const SkewRingMatrix& m) {
  require_valid(m);
  const int p = m.variables();
  std::vector<std::vector<RingElement>> a(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a[static_cast<std::size_t>(i)].push_back(m.at(i, j));
  std::vector<int> order(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) order[static_cast<std::size_t>(i)] = i;
  auto cell = [&a](int u, int v) -> RingElement& { return a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };

  RingElement result = RingElement::identity(p);
  bool negate = false;
  while (!order.empty()) {
    const std::size_t active = order.size();
    std::size_t pa = active;
    std::size_t pb = active;
    for (std::size_t x = 0; x < active && pa == active; ++x)
      for (std::size_t y = x + 1; y < active; ++y)
        if (cell(order[x], order[y]).is_unit()) {
          pa = x;
          pb = y;
          break;
        }
    if (pa == active) return std::nullopt;
    if (pa != 0) {
      std::swap(order[0], order[pa]);
      negate = !negate;
    }
    if (pb != 1) {
      std::swap(order[1], order[pb]);
      negate = !negate;
    }
    const int i = order[0];
    const int j = order[1];
    result = ring_mul(result, cell(i, j));
    const RingElement inv = cell(i, j).inverse();
    std::vector<RingElement> scaled;
    for (std::size_t k = 2; k < active; ++k) scaled.push_back(ring_mul(cell(i, order[k]), inv));
    for (std::size_t k = 2; k < active; ++k) {
      for (std::size_t l = k + 1; l < active; ++l) {
        const int u = order[k];
        const int v = order[l];
        RingElement& d = cell(u, v);
        d -= ring_mul(scaled[k - 2], cell(j, v));
        d += ring_mul(cell(j, u), scaled[l - 2]);
        cell(v, u) = -d;
      }
    }
    order.erase(order.begin(), order.begin() + 2);
  }
  return negate ? -result : result;
}

namespace kernels {

bool trunc_pfaffian_elimination(std::span<Fp> work, int dim, int L, Fp* out) {
  const auto uL = static_cast<std::size_t>(L);
  const auto udim = static_cast<std::size_t>(dim);
  auto cell = [&](int u, int v) { return work.data() + (static_cast<std::size_t>(u) * udim + static_cast<std::size_t>(v)) * uL; };
  std::vector<int> order(udim);
  for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<Fp> result(uL);
  std::vector<Fp> tmp(uL);
  std::vector<Fp> inv(uL);
  std::vector<Fp> scaled(udim * uL);
  result[0] = Fp::one();
  bool negate = false;
  std::size_t active = udim;
  std::size_t first = 0;  // order[first..] are the remaining indices
  while (active > 0) {
    std::size_t pa = active;
    std::size_t pb = active;
    for (std::size_t x = 0; x < active && pa == active; ++x)
      for (std::size_t y = x + 1; y < active; ++y)
        if (!cell(order[first + x], order[first + y])[0].is_zero()) {
          pa = x;
          pb = y;
          break;
        }
    if (pa == active) return false;
    if (pa != 0) {
      std::swap(order[first], order[first + pa]);
      negate = !negate;
    }
    if (pb != 1) {
      std::swap(order[first + 1], order[first + pb]);
      negate = !negate;
    }
    const int i = order[first];
    const int j = order[first + 1];
    const Fp* piv = cell(i, j);
    trunc_mul(result.data(), piv, tmp.data(), L);
    std::swap(result, tmp);
    trunc_inverse(piv, inv.data(), L);
    for (std::size_t k = 2; k < active; ++k) trunc_mul(cell(i, order[first + k]), inv.data(), scaled.data() + k * uL, L);
    for (std::size_t k = 2; k < active; ++k) {
      const int u = order[first + k];
      const Fp* sk = scaled.data() + k * uL;
      const Fp* ju = cell(j, u);
      for (std::size_t l = k + 1; l < active; ++l) {
        const int v = order[first + l];
        const Fp* sl = scaled.data() + l * uL;
        const Fp* jv = cell(j, v);
        Fp* d = cell(u, v);
        Fp* dt = cell(v, u);
        for (int r = 0; r < L; ++r) {
          unsigned __int128 minus = 0;
          unsigned __int128 plus = 0;
          for (int t = 0; t <= r; ++t) {
            minus += static_cast<unsigned __int128>(sk[t].value()) * jv[r - t].value();
            plus += static_cast<unsigned __int128>(ju[t].value()) * sl[r - t].value();
          }
          d[r] = d[r] - Fp::from_reduced(Fp::reduce_wide(minus)) + Fp::from_reduced(Fp::reduce_wide(plus));
          dt[r] = -d[r];
        }
      }
    }
    first += 2;
    active -= 2;
  }
  for (int r = 0; r < L; ++r) out[r] = negate ? -result[static_cast<std::size_t>(r)] : result[static_cast<std::size_t>(r)];
  return true;
}

void trunc_pfaffian_clow(std::span<const Fp> matrix, int dim, int L, Fp* out) {
  const auto uL = static_cast<std::size_t>(L);
  if (dim == 0) {
    std::fill(out, out + L, Fp::zero());
    out[0] = Fp::one();
    return;
  }
  auto entry = [&](int u, int v) {
    const Fp* src = matrix.data() + (static_cast<std::size_t>(u) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(v)) * uL;
    return std::vector<Fp>(src, src + L);
  };
  const auto result = clow_pfaffian(TruncOps{L}, dim, entry);
  std::copy(result.begin(), result.end(), out);
}

void trunc_pfaffian(std::span<const Fp> matrix, std::span<Fp> work, int dim, int L, Fp* out) {
  std::copy(matrix.begin(), matrix.end(), work.begin());
  if (!trunc_pfaffian_elimination(work, dim, L, out)) trunc_pfaffian_clow(matrix, dim, L, out);
}

}  // namespace kernels

RingElement pfaffian(const SkewRingMatrix& m) {
  require_valid(m);
  const int p = m.variables();
  const int dim = m.dim();
  if (dim == 0) return RingElement::identity(p);
  const std::size_t N = std::size_t{1} << p;
  const std::size_t L = static_cast<std::size_t>(p) + 1;
  const auto udim = static_cast<std::size_t>(dim);

  // Ranked transforms of the nonzero upper-triangle entries.
  std::vector<std::vector<Fp>> ranked(udim * udim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      if (m.at(i, j).is_zero()) continue;
      auto& r = ranked[static_cast<std::size_t>(i) * udim + static_cast<std::size_t>(j)];
      r.resize(N * L);
      kernels::ranked_zeta(m.at(i, j).coefficients(), p, r);
    }

  std::vector<Fp> pf_ranked(N * L);
  const auto sN = static_cast<std::int64_t>(N);
#pragma omp parallel
  {
    std::vector<Fp> local(udim * udim * L);
    std::vector<Fp> work(local.size());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t x = 0; x < sN; ++x) {
      const std::size_t off = static_cast<std::size_t>(x) * L;
      for (std::size_t i = 0; i < udim; ++i)
        for (std::size_t j = i + 1; j < udim; ++j) {
          const auto& r = ranked[i * udim + j];
          Fp* up = local.data() + (i * udim + j) * L;
          Fp* lo = local.data() + (j * udim + i) * L;
          for (std::size_t t = 0; t < L; ++t) {
            up[t] = r.empty() ? Fp::zero() : r[off + t];
            lo[t] = -up[t];
          }
        }
      kernels::trunc_pfaffian(local, work, dim, static_cast<int>(L), pf_ranked.data() + off);
    }
  }
  RingElement out(p);
  kernels::ranked_mobius_project(pf_ranked, p, out.coefficients());
  return out;
}

}  // namespace bgcolor
