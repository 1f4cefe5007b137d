#include "bgcolor/modsolve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "bgcolor/errors.hpp"
#include "bgcolor/kernels.hpp"
#include "bgcolor/pfaffian.hpp"
#include "bgcolor/structures.hpp"

namespace bgcolor {

std::vector<CoverType> enumerate_valid_types(int nbar, int target) {
  std::vector<CoverType> out;
  if (nbar < 0 || target < 0) return out;
  for (int t1 = nbar % 2; t1 <= nbar; t1 += 2) {
    const int t2 = (nbar - t1) / 2;
    for (int t0 = 0; t0 + t1 + t2 <= target; ++t0) out.push_back({t0, t1, t2});
  }
  return out;
}

bool check_modulator(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("check_modulator: vertex out of range");
    in_s[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet rest;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
  return is_triangle_free(induced_subgraph(g, rest).graph);
}

std::size_t CliqueTable::clique_count() const {
  return static_cast<std::size_t>(std::count(is_clique.begin(), is_clique.end(), std::uint8_t{1}));
}

CliqueTable build_clique_table(const Graph& g, const VertexSet& s_in) {
  CliqueTable t;
  t.s = s_in;
  std::sort(t.s.begin(), t.s.end());
  t.s.erase(std::unique(t.s.begin(), t.s.end()), t.s.end());
  const int p = t.p();
  if (p > kMaxRingVariables)
    throw GuardError("modulator of size " + std::to_string(p) + " exceeds the limit of " + std::to_string(kMaxRingVariables));
  for (Vertex v : t.s)
    if (v < 0 || v >= g.size()) throw std::invalid_argument("build_clique_table: vertex out of range");

  t.n_mask.assign(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v = 0; v < g.size(); ++v)
    for (int i = 0; i < p; ++i)
      if (g.adjacent(v, t.s[static_cast<std::size_t>(i)])) t.n_mask[static_cast<std::size_t>(v)] |= Subset{1} << i;
  t.within_s_adj.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) t.within_s_adj[static_cast<std::size_t>(i)] = t.n_mask[static_cast<std::size_t>(t.s[static_cast<std::size_t>(i)])];

  const std::size_t N = std::size_t{1} << p;
  t.is_clique.assign(N, 0);
  t.is_clique[0] = 1;
  for (Subset x = 1; x < N; ++x) {
    const int top = 31 - std::countl_zero(x);
    const Subset rest = x ^ (Subset{1} << top);
    t.is_clique[x] = t.is_clique[rest] && (t.within_s_adj[static_cast<std::size_t>(top)] & rest) == rest;
  }
  return t;
}

RingElement build_edge_polynomial(const CliqueTable& table, Subset restriction, Rng& rng) {
  RingElement e(table.p());
  restriction &= table.full();
  for (Subset c = 0; c <= table.full(); ++c)
    if ((c & ~restriction) == 0 && table.is_clique[c]) e.set_coefficient(c, rng.uniform_fp());
  return e;
}

RingElement build_interior_polynomial(const CliqueTable& table, Rng& rng) {
  RingElement e(table.p());
  for (Subset c = 1; c <= table.full(); ++c)
    if (table.is_clique[c]) e.set_coefficient(c, rng.uniform_fp());
  return e;
}

AuxGraph build_aux_graph(const Graph& g, const VertexSet& sbar, int t1) {
  AuxGraph aux;
  aux.sbar = sbar;
  aux.t1 = t1;
  const int nbar = static_cast<int>(sbar.size());
  aux.h = Graph(nbar + t1);
  for (int a = 0; a < nbar; ++a) {
    for (int b = a + 1; b < nbar; ++b)
      if (g.adjacent(sbar[static_cast<std::size_t>(a)], sbar[static_cast<std::size_t>(b)])) aux.h.add_edge(a, b);
    for (int u = nbar; u < nbar + t1; ++u) aux.h.add_edge(a, u);
  }
  return aux;
}

namespace {

struct TrialInputs {
  std::vector<Edge> edges;            // H edges, lexicographic
  std::vector<RingElement> entries;   // matching edge polynomials
  std::vector<RingElement> interior;  // phi_1 .. phi_t0max
};

// Random draws in a fixed order: edge polynomials in lexicographic edge
// order, then the interior polynomials.
TrialInputs draw_trial(const CliqueTable& table, const AuxGraph& aux, int t0_max, std::uint64_t seed) {
  Rng rng(seed);
  TrialInputs in;
  in.edges = aux.h.edges();
  for (auto [a, b] : in.edges) {
    const Subset na = table.n_mask[static_cast<std::size_t>(aux.sbar[static_cast<std::size_t>(a)])];
    const Subset restriction =
        aux.is_u(b) ? na : (na & table.n_mask[static_cast<std::size_t>(aux.sbar[static_cast<std::size_t>(b)])]);
    in.entries.push_back(build_edge_polynomial(table, restriction, rng));
  }
  for (int i = 0; i < t0_max; ++i) in.interior.push_back(build_interior_polynomial(table, rng));
  return in;
}

std::vector<Fp> coefficients_ring(const AuxGraph& aux, const TrialInputs& in, int p) {
  SkewRingMatrix b(aux.size(), p);
  for (std::size_t e = 0; e < in.edges.size(); ++e) b.set(in.edges[e].first, in.edges[e].second, in.entries[e]);
  auto eliminated = pfaffian_elimination(b);
  RingElement prod = eliminated ? std::move(*eliminated) : pfaffian_division_free(b);
  const Subset full = prod.full_set();
  std::vector<Fp> out{prod.coefficient_at(full)};
  for (const auto& phi : in.interior) {
    prod = reference::ring_mul(prod, phi);
    out.push_back(prod.coefficient_at(full));
  }
  return out;
}

std::vector<Fp> coefficients_ranked(const AuxGraph& aux, const TrialInputs& in, int p) {
  const std::size_t N = std::size_t{1} << p;
  const std::size_t L = static_cast<std::size_t>(p) + 1;
  const int dim = aux.size();
  const auto udim = static_cast<std::size_t>(dim);
  const std::size_t terms = in.interior.size() + 1;

  auto transform = [&](const RingElement& e) {
    std::vector<Fp> r(N * L);
    kernels::ranked_zeta(e.coefficients(), p, r);
    return r;
  };
  std::vector<std::vector<Fp>> entries;
  entries.reserve(in.entries.size());
  for (const auto& e : in.entries) entries.push_back(transform(e));
  std::vector<std::vector<Fp>> interior;
  interior.reserve(in.interior.size());
  for (const auto& e : in.interior) interior.push_back(transform(e));

  std::vector<Fp> total(terms);
  const auto sN = static_cast<std::int64_t>(N);
#pragma omp parallel
  {
    std::vector<Fp> local(udim * udim * L);
    std::vector<Fp> work(local.size());
    std::vector<Fp> prod(L);
    std::vector<Fp> tmp(L);
    std::vector<Fp> acc(terms);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t sx = 0; sx < sN; ++sx) {
      const auto x = static_cast<std::size_t>(sx);
      const std::size_t off = x * L;
      for (std::size_t e = 0; e < in.edges.size(); ++e) {
        const auto a = static_cast<std::size_t>(in.edges[e].first);
        const auto b = static_cast<std::size_t>(in.edges[e].second);
        Fp* up = local.data() + (a * udim + b) * L;
        Fp* lo = local.data() + (b * udim + a) * L;
        for (std::size_t t = 0; t < L; ++t) {
          up[t] = entries[e][off + t];
          lo[t] = -up[t];
        }
      }
      kernels::trunc_pfaffian(local, work, dim, static_cast<int>(L), prod.data());
      // inclusion-exclusion sign (-1)^{p - |X|}
      const bool negative = ((p - std::popcount(x)) & 1) != 0;
      auto accumulate = [&](std::size_t slot) {
        acc[slot] = negative ? acc[slot] - prod[L - 1] : acc[slot] + prod[L - 1];
      };
      accumulate(0);
      for (std::size_t i = 0; i < interior.size(); ++i) {
        kernels::trunc_mul(prod.data(), interior[i].data() + off, tmp.data(), static_cast<int>(L));
        std::swap(prod, tmp);
        accumulate(i + 1);
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < terms; ++i) total[i] += acc[i];
  }
  return total;
}

}  // namespace

std::vector<Fp> full_monomial_coefficients(const CliqueTable& table, const AuxGraph& aux, int t0_max,
                                           std::uint64_t seed, Engine engine, std::size_t ranked_memory_budget) {
  const TrialInputs in = draw_trial(table, aux, t0_max, seed);
  const int p = table.p();
  const std::size_t ranked_bytes =
      (in.entries.size() + in.interior.size()) * (std::size_t{1} << p) * (static_cast<std::size_t>(p) + 1) * sizeof(Fp);
  if (engine == Engine::kRing || ranked_bytes > ranked_memory_budget) return coefficients_ring(aux, in, p);
  return coefficients_ranked(aux, in, p);
}

namespace {

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolveReport solve_clique_cover_with_modulator(const ModulatorInstance& inst, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.g;
  const int n = g.size();
  SolveReport report;
  report.problem = "modulator-cover";
  report.n = n;
  report.k_or_target = inst.target;
  report.target = inst.target;
  report.seed = opts.seed;
  report.repeats = opts.repeats;
  report.modulator_size = static_cast<int>(inst.s.size());

  if (opts.repeats < 1) throw std::invalid_argument("repeats must be positive");
  const CliqueTable table = build_clique_table(g, inst.s);
  report.modulator_size = table.p();
  if (!check_modulator(g, table.s)) throw std::invalid_argument("modulator check failed: g - S contains a triangle");

  if (inst.target >= n) {
    report.decision = true;
    report.branch = Branch::kTrivial;
    report.witness = complete_with_singletons(n, {});
    report.elapsed_ms = elapsed_ms_since(start);
    return report;
  }
  if (inst.target <= 0) {
    report.decision = false;
    report.branch = Branch::kTrivial;
    report.elapsed_ms = elapsed_ms_since(start);
    return report;
  }

  report.branch = Branch::kAlgebraic;
  const int p = table.p();
  VertexSet sbar;
  {
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex v : table.s) in_s[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < n; ++v)
      if (!in_s[static_cast<std::size_t>(v)]) sbar.push_back(v);
  }
  const int nbar = static_cast<int>(sbar.size());
  const int mu_sbar = static_cast<int>(maximum_matching(induced_subgraph(g, sbar).graph).size());

  std::map<int, int> max_t0;  // t1 -> largest valid t0
  for (const auto& t : enumerate_valid_types(nbar, inst.target)) max_t0[t.t1] = std::max(max_t0[t.t1], t.t0);

  for (const auto& [t1, t0_valid] : max_t0) {
    report.types_tried += t0_valid + 1;
    // H needs a perfect matching for Pf(B) to be nonzero; prod phi_i
    // vanishes once t0 exceeds p.
    if (2 * mu_sbar < nbar - t1) continue;
    const int t0_max = std::min(t0_valid, p);
    const AuxGraph aux = build_aux_graph(g, sbar, t1);
    for (int r = 0; r < opts.repeats; ++r) {
      const auto seed = Rng::derive_seed(opts.seed, static_cast<std::uint64_t>(t1), static_cast<std::uint64_t>(r));
      const auto coeffs = full_monomial_coefficients(table, aux, t0_max, seed, opts.engine, opts.ranked_memory_budget);
      if (std::any_of(coeffs.begin(), coeffs.end(), [](Fp c) { return !c.is_zero(); })) {
        report.decision = true;
        if (opts.stop_at_first_yes) {
          report.elapsed_ms = elapsed_ms_since(start);
          return report;
        }
      }
    }
  }
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

SolveReport solve_coloring_with_modulator(const Graph& g, const VertexSet& s, int target, const SolveOptions& opts) {
  SolveReport report = solve_clique_cover_with_modulator({complement(g), s, target}, opts);
  report.problem = "modulator-color";
  if (report.witness) report.witness = translate_cover_coloring(g, *report.witness);
  return report;
}

}  // namespace bgcolor
