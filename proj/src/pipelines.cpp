#include "bgcolor/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgcolor/oracle.hpp"

namespace bgcolor {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VertexSet complement_of(int n, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

SolveReport base_report(const char* problem, const Graph& g, int k, const SolveOptions& opts) {
  SolveReport r;
  r.problem = problem;
  r.n = g.size();
  r.k_or_target = k;
  r.seed = opts.seed;
  r.repeats = opts.repeats;
  return r;
}

// Runs the algebraic solver on the cover side and folds its outcome into r.
void delegate(SolveReport& r, const Graph& g, const Graph& gc, const VertexSet& s, long long target,
              const SolveOptions& opts) {
  if (target < 0) {
    r.decision = false;
    r.branch = Branch::kTrivial;
    return;
  }
  const int clamped = static_cast<int>(std::min<long long>(target, g.size()));
  SolveReport inner = solve_clique_cover_with_modulator({gc, s, clamped}, opts);
  r.decision = inner.decision;
  r.branch = inner.branch;
  r.modulator_size = inner.modulator_size;
  r.types_tried = inner.types_tried;
  if (inner.witness) r.witness = translate_cover_coloring(g, *inner.witness);
}

}  // namespace

SolveReport solve_dual_coloring(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const auto start = Clock::now();
  const int n = g.size();
  SolveReport r = base_report("dual", g, k, opts);
  r.target = n - k;
  if (k == 0) {
    r.decision = true;
    r.witness = translate_cover_coloring(g, complete_with_singletons(n, {}));
    r.elapsed_ms = ms_since(start);
    return r;
  }
  const Graph gc = complement(g);
  const TrianglePacking packing = greedy_triangle_packing(gc);
  const int t = static_cast<int>(packing.size());
  r.packing_size = t;
  if (2 * t >= k) {
    std::vector<VertexSet> cliques;
    for (const auto& tri : packing.triangles) cliques.push_back({tri[0], tri[1], tri[2]});
    r.decision = true;
    r.branch = Branch::kPacking;
    r.witness = translate_cover_coloring(g, complete_with_singletons(n, std::move(cliques)));
  } else {
    delegate(r, g, gc, packing.vertices(), n - k, opts);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

SolveReport solve_dual_coloring_baseline(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const auto start = Clock::now();
  const int n = g.size();
  SolveReport r = base_report("dual-baseline", g, k, opts);
  r.target = n - k;
  if (k == 0) {
    r.decision = true;
    r.witness = translate_cover_coloring(g, complete_with_singletons(n, {}));
    r.elapsed_ms = ms_since(start);
    return r;
  }
  const Graph gc = complement(g);
  const Matching m = maximum_matching(gc);
  r.packing_size = static_cast<int>(m.size());
  if (static_cast<int>(m.size()) >= k) {
    std::vector<VertexSet> cliques;
    for (auto [a, b] : m.edges) cliques.push_back(a < b ? VertexSet{a, b} : VertexSet{b, a});
    r.decision = true;
    r.branch = Branch::kPacking;
    r.witness = translate_cover_coloring(g, complete_with_singletons(n, std::move(cliques)));
  } else {
    VertexSet s;
    for (auto [a, b] : m.edges) {
      s.push_back(a);
      s.push_back(b);
    }
    std::sort(s.begin(), s.end());
    delegate(r, g, gc, s, n - k, opts);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

LargePackingCover construct_large_packing_cover(const Graph& gc, int k, const TrianglePacking& packing,
                                                bool greedy_matching) {
  if (k < 0 || static_cast<int>(packing.size()) <= 2 * k)
    throw std::invalid_argument("construct_large_packing_cover: need more than 2k triangles");
  LargePackingCover out;
  std::vector<VertexSet> cliques;
  for (int i = 0; i < 2 * k; ++i) {
    const auto& tri = packing.triangles[static_cast<std::size_t>(i)];
    cliques.push_back({tri[0], tri[1], tri[2]});
    out.s.insert(out.s.end(), tri.begin(), tri.end());
  }
  std::sort(out.s.begin(), out.s.end());
  const VertexSet sbar = complement_of(gc.size(), out.s);
  const auto sub = induced_subgraph(gc, sbar);
  const Matching m = greedy_matching ? greedy_maximal_matching(sub.graph) : maximum_matching(sub.graph);
  for (auto [a, b] : m.edges) {
    VertexSet e{sub.to_original[static_cast<std::size_t>(a)], sub.to_original[static_cast<std::size_t>(b)]};
    std::sort(e.begin(), e.end());
    cliques.push_back(std::move(e));
  }
  out.mu_out = static_cast<int>(m.size());
  out.alpha_out = static_cast<int>(sbar.size()) - 2 * out.mu_out;
  out.cover = complete_with_singletons(gc.size(), std::move(cliques));
  return out;
}

SolveReport solve_below_structural_guarantee(const Graph& g, int k, const SolveOptions& opts, bool greedy_matching) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto start = Clock::now();
  const int n = g.size();
  SolveReport r = base_report("guarantee", g, k, opts);
  const Graph gc = complement(g);
  const TrianglePacking packing = greedy_triangle_packing(gc);
  const int t = static_cast<int>(packing.size());
  r.packing_size = t;
  const int mu = static_cast<int>(maximum_matching(gc).size());
  r.params["mu"] = mu;
  r.params["mu_bar"] = mu;

  if (t > 2 * k) {
    const auto built = construct_large_packing_cover(gc, k, packing, greedy_matching);
    r.decision = true;
    r.branch = Branch::kPacking;
    r.modulator_size = static_cast<int>(built.s.size());
    r.params["mu_out"] = built.mu_out;
    r.params["alpha_out"] = built.alpha_out;
    r.witness = translate_cover_coloring(g, built.cover);
    // The certificate does not need omega; report it when it is affordable.
    if (n <= oracle::kMaxIndependentSetVertices) {
      const int alpha = oracle::max_independent_set_exact(gc);
      r.params["alpha"] = alpha;
      r.params["omega"] = alpha;
      r.target = alpha + mu - k;
    } else {
      r.target = -1;
    }
    r.elapsed_ms = ms_since(start);
    return r;
  }

  const int alpha = oracle::max_independent_set_exact(gc);
  r.params["alpha"] = alpha;
  r.params["omega"] = alpha;
  r.target = alpha + mu - k;
  delegate(r, g, gc, packing.vertices(), r.target, opts);
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace bgcolor
