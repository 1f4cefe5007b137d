#include "bgcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bgcolor/errors.hpp"

namespace bgcolor::oracle {
namespace {

using Mask = std::uint64_t;

void guard(const Graph& g, int limit, const char* what) {
  if (g.size() > limit)
    throw GuardError(std::string(what) + ": n = " + std::to_string(g.size()) + " exceeds " + std::to_string(limit));
}

std::vector<Mask> rows(const Graph& g) {
  std::vector<Mask> r(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) r[static_cast<std::size_t>(v)] = g.row_mask(v);
  return r;
}

int lowest(Mask m) { return std::countr_zero(m); }

// Calls visit(I) for every independent set I of the graph restricted to
// `domain` that contains `base` and is maximal within `domain`.
template <class Visit>
void maximal_independent_sets(const std::vector<Mask>& adj, Mask domain, Mask chosen, Mask candidates, Visit& visit) {
  if (candidates == 0) {
    // maximal: every vertex of domain outside chosen has a neighbor in chosen
    Mask outside = domain & ~chosen;
    while (outside) {
      const int v = lowest(outside);
      outside &= outside - 1;
      if ((adj[static_cast<std::size_t>(v)] & chosen) == 0) return;
    }
    visit(chosen);
    return;
  }
  const int v = lowest(candidates);
  const Mask rest = candidates & ~(Mask{1} << v);
  maximal_independent_sets(adj, domain, chosen | (Mask{1} << v), rest & ~adj[static_cast<std::size_t>(v)], visit);
  maximal_independent_sets(adj, domain, chosen, rest, visit);
}

}  // namespace

int chromatic_number_exact(const Graph& g) {
  guard(g, kMaxChromaticVertices, "chromatic_number_exact");
  const int n = g.size();
  const auto adj = rows(g);
  const std::size_t N = std::size_t{1} << n;
  std::vector<std::uint8_t> chi(N, 0);
  for (Mask t = 1; t < N; ++t) {
    const int v = lowest(t);
    int best = n + 1;
    auto visit = [&](Mask indep) { best = std::min(best, 1 + chi[t & ~indep]); };
    const Mask base = Mask{1} << v;
    maximal_independent_sets(adj, t, base, t & ~base & ~adj[static_cast<std::size_t>(v)], visit);
    chi[t] = static_cast<std::uint8_t>(best);
  }
  return chi[N - 1];
}

namespace {

class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph& g) : g_(g), n_(g.size()), color_(static_cast<std::size_t>(n_), -1) {}

  int run() {
    if (n_ == 0) return 0;
    best_ = n_;
    search(0, 0);
    return best_;
  }

 private:
  // Saturation: number of distinct colors among colored neighbors.
  int saturation(Vertex v) const {
    std::uint64_t used = 0;
    for (Vertex w = 0; w < n_; ++w)
      if (g_.adjacent(v, w) && color_[static_cast<std::size_t>(w)] >= 0) used |= std::uint64_t{1} << color_[static_cast<std::size_t>(w)];
    return std::popcount(used);
  }

  void search(int colored, int colors_used) {
    if (colors_used >= best_) return;
    if (colored == n_) {
      best_ = colors_used;
      return;
    }
    Vertex pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = saturation(v);
      const int deg = g_.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (int c = 0; c <= colors_used && c < best_; ++c) {
      bool ok = true;
      for (Vertex w = 0; w < n_ && ok; ++w)
        if (g_.adjacent(pick, w) && color_[static_cast<std::size_t>(w)] == c) ok = false;
      if (!ok) continue;
      color_[static_cast<std::size_t>(pick)] = c;
      search(colored + 1, std::max(colors_used, c + 1));
      color_[static_cast<std::size_t>(pick)] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  int best_ = 0;
};

int mis_rec(const std::vector<Mask>& adj, Mask cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  if (size + std::popcount(cand) <= best) return best;
  // Take isolated vertices directly; otherwise branch on a max-degree vertex.
  int pick = -1;
  int pick_deg = -1;
  Mask scan = cand;
  while (scan) {
    const int v = lowest(scan);
    scan &= scan - 1;
    const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
    if (deg == 0) return mis_rec(adj, cand & ~(Mask{1} << v), size + 1, best);
    if (deg > pick_deg) {
      pick = v;
      pick_deg = deg;
    }
  }
  const Mask bit = Mask{1} << pick;
  best = mis_rec(adj, cand & ~bit & ~adj[static_cast<std::size_t>(pick)], size + 1, best);
  return mis_rec(adj, cand & ~bit, size, best);
}

int matching_rec(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return 0;
  const int v = lowest(alive);
  const Mask rest = alive & ~(Mask{1} << v);
  int best = matching_rec(adj, rest);
  Mask nb = adj[static_cast<std::size_t>(v)] & rest;
  while (nb) {
    const int u = lowest(nb);
    nb &= nb - 1;
    best = std::max(best, 1 + matching_rec(adj, rest & ~(Mask{1} << u)));
  }
  return best;
}

}  // namespace

int chromatic_number_branch_and_bound(const Graph& g) {
  guard(g, 64, "chromatic_number_branch_and_bound");
  return ColoringSearch(g).run();
}

int clique_cover_number_exact(const Graph& g) {
  guard(g, kMaxChromaticVertices, "clique_cover_number_exact");
  return chromatic_number_exact(complement(g));
}

int max_independent_set_exact(const Graph& g) {
  guard(g, kMaxIndependentSetVertices, "max_independent_set_exact");
  const Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
  return mis_rec(rows(g), all, 0, 0);
}

int clique_number_exact(const Graph& g) {
  guard(g, kMaxIndependentSetVertices, "clique_number_exact");
  return max_independent_set_exact(complement(g));
}

int maximum_matching_exact(const Graph& g) {
  guard(g, kMaxMatchingVertices, "maximum_matching_exact");
  const Mask all = (Mask{1} << g.size()) - 1;
  return matching_rec(rows(g), all);
}

}  // namespace bgcolor::oracle
