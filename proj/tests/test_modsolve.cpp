#include <algorithm>
#include <bit>
#include <vector>

#include "bgcolor/errors.hpp"
#include "bgcolor/generators.hpp"
#include "bgcolor/modsolve.hpp"
#include "bgcolor/oracle.hpp"
#include "bgcolor/structures.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bgcolor;
using bgcolor::testing::random_graph;

namespace {

std::size_t populated(const RingElement& e) {
  std::size_t c = 0;
  for (Subset t = 0; t < e.size(); ++t) c += !e.coefficient_at(t).is_zero();
  return c;
}

SolveOptions opts_with(std::uint64_t seed, Engine engine = Engine::kRanked) {
  SolveOptions o;
  o.seed = seed;
  o.engine = engine;
  return o;
}

bool decide(const Graph& g, const VertexSet& s, int target, std::uint64_t seed, Engine engine = Engine::kRanked) {
  return solve_clique_cover_with_modulator({g, s, target}, opts_with(seed, engine)).decision;
}

}  // namespace

TEST_CASE("check_modulator") {
  CHECK_FALSE(check_modulator(complete_graph(4), {0}));
  CHECK(check_modulator(complete_graph(4), {0, 1}));
  CHECK(check_modulator(cycle_graph(5), {}));
  CHECK_THROWS((void)check_modulator(cycle_graph(5), {5}));
}

TEST_CASE("enumerate_valid_types") {
  auto pairs = [](int nbar, int target) {
    std::vector<std::pair<int, int>> out;
    for (const auto& t : enumerate_valid_types(nbar, target)) {
      CHECK((nbar - t.t1) % 2 == 0);
      CHECK(t.t2 == (nbar - t.t1) / 2);
      CHECK(t.t0 + t.t1 + t.t2 <= target);
      CHECK((nbar + t.t1) % 2 == 0);  // aux graph has an even vertex count
      // random factors per monomial: one per matching edge and one per phi_i
      CHECK((nbar + t.t1) / 2 + t.t0 <= std::max(target, nbar));
      out.emplace_back(t.t0, t.t1);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(pairs(3, 4) == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 1}, {1, 3}, {2, 1}});
  CHECK(pairs(0, 2) == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(pairs(4, 1).empty());
  for (int nbar = 0; nbar <= 9; ++nbar)
    for (int target = 0; target <= 9; ++target) {
      std::size_t brute = 0;
      for (int t0 = 0; t0 <= target; ++t0)
        for (int t1 = 0; t1 <= nbar; ++t1)
          if ((nbar - t1) % 2 == 0 && t0 + (t1 + nbar) / 2 <= target) ++brute;
      CHECK(pairs(nbar, target).size() == brute);
    }
}

TEST_CASE("clique table") {
  const auto tri = build_clique_table(complete_graph(5), {1, 2, 4});
  CHECK(tri.clique_count() == 8);
  const auto pair = build_clique_table(Graph(4), {0, 3});
  CHECK(pair.clique_count() == 3);
  CHECK(pair.is_clique[0]);
  CHECK(pair.is_clique[1]);
  CHECK(pair.is_clique[2]);
  CHECK_FALSE(pair.is_clique[3]);
  CHECK_THROWS_AS((void)build_clique_table(Graph(30), VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
                                                                  17, 18, 19, 20, 21, 22, 23, 24}),
                  GuardError);

  Rng rng(8);
  for (int rep = 0; rep < 5; ++rep) {
    const Graph g = random_graph(14, 0.6, rng);
    const VertexSet s{0, 2, 3, 5, 6, 7, 9, 10, 12, 13};
    const auto t = build_clique_table(g, s);
    for (Subset x = 0; x <= t.full(); ++x) {
      bool clique = true;
      for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
          if ((x >> i & 1) && (x >> j & 1) && !g.adjacent(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]))
            clique = false;
      CHECK(static_cast<bool>(t.is_clique[x]) == clique);
    }
  }
}

TEST_CASE("edge and interior polynomials") {
  Rng rng(1);
  const auto tri = build_clique_table(complete_graph(3), {0, 1, 2});
  const auto e0 = build_edge_polynomial(tri, 0, rng);
  CHECK(populated(e0) == 1);
  CHECK_FALSE(e0.coefficient_at(0).is_zero());
  const auto e1 = build_edge_polynomial(tri, 0b010, rng);
  CHECK(populated(e1) == 2);
  CHECK_FALSE(e1.coefficient_at(0b010).is_zero());
  CHECK(populated(build_edge_polynomial(tri, tri.full(), rng)) == 8);
  CHECK(populated(build_interior_polynomial(tri, rng)) == 7);

  const auto ind = build_clique_table(Graph(2), {0, 1});
  const auto phi = build_interior_polynomial(ind, rng);
  CHECK(populated(phi) == 2);
  CHECK(phi.coefficient_at(0).is_zero());
  CHECK(phi.coefficient_at(3).is_zero());
  const auto none = build_clique_table(Graph(2), {});
  CHECK(build_interior_polynomial(none, rng).is_zero());

  Rng grng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = random_graph(9, 0.5, grng);
    const auto t = build_clique_table(g, {0, 1, 2, 3, 4, 5});
    CHECK(populated(build_edge_polynomial(t, t.full(), rng)) == t.clique_count());
    CHECK(populated(build_interior_polynomial(t, rng)) == t.clique_count() - 1);
  }
}

TEST_CASE("aux graph") {
  const auto aux = build_aux_graph(cycle_graph(5), {0, 1, 2}, 3);
  CHECK(aux.size() == 6);
  CHECK(aux.h.adjacent(0, 1));
  CHECK_FALSE(aux.h.adjacent(0, 2));
  for (int u = 3; u < 6; ++u) {
    CHECK(aux.is_u(u));
    for (int v = 0; v < 3; ++v) CHECK(aux.h.adjacent(u, v));
    for (int w = 3; w < 6; ++w) CHECK_FALSE(aux.h.adjacent(u, w));
  }
}

TEST_CASE("solver examples") {
  CHECK(decide(complete_graph(3), {0}, 1, 1));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK_FALSE(decide(Graph(3), {0}, 2, seed));
  const Graph c5 = cycle_graph(5);
  CHECK(solve_coloring_with_modulator(c5, {0, 1}, 3, opts_with(1)).decision);
  CHECK_FALSE(solve_coloring_with_modulator(c5, {0, 1}, 2, opts_with(1)).decision);
  const auto kn = solve_coloring_with_modulator(complete_graph(6), {}, 6, opts_with(1));
  CHECK(kn.decision);
  CHECK(kn.branch == Branch::kTrivial);
  REQUIRE(kn.witness.has_value());
  CHECK(verify_coloring(complete_graph(6), std::get<Coloring>(*kn.witness)));
  CHECK_THROWS_AS((void)decide(complete_graph(4), {0}, 2, 1), std::invalid_argument);
}

TEST_CASE("engines agree bit for bit") {
  Rng rng(31);
  for (int rep = 0; rep < 25; ++rep) {
    const auto inst = gen_planted_comodulator(7 + rep % 5, 1 + rep % 5, 100 + rep);
    const auto table = build_clique_table(inst.cover_side, inst.s);
    VertexSet sbar;
    for (int v = 0; v < inst.cover_side.size(); ++v)
      if (!std::binary_search(inst.s.begin(), inst.s.end(), v)) sbar.push_back(v);
    for (int t1 = static_cast<int>(sbar.size()) % 2; t1 <= static_cast<int>(sbar.size()); t1 += 2) {
      const auto aux = build_aux_graph(inst.cover_side, sbar, t1);
      const auto seed = rng.next_u64();
      const auto a = full_monomial_coefficients(table, aux, table.p(), seed, Engine::kRanked);
      const auto b = full_monomial_coefficients(table, aux, table.p(), seed, Engine::kRing);
      CHECK(a == b);
    }
  }
}

TEST_CASE("solver matches oracle on packing modulators") {
  Rng rng(555);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = random_graph(3 + rep % 8, 0.3 + 0.2 * (rep % 3), rng);
    const VertexSet s = greedy_triangle_packing(g).vertices();
    const int theta = oracle::clique_cover_number_exact(g);
    bool prev = false;
    for (int target = 1; target <= g.size(); ++target) {
      const bool yes = decide(g, s, target, static_cast<std::uint64_t>(rep * 100 + target));
      CHECK(yes == (theta <= target));
      if (prev) CHECK(yes);  // monotone in the target
      prev = yes;
    }
  }
}

TEST_CASE("solver matches oracle on planted modulators, both engines") {
  for (int rep = 0; rep < 20; ++rep) {
    const auto inst = gen_planted_comodulator(8 + rep % 4, rep % 5, 900 + rep);
    const int theta = oracle::clique_cover_number_exact(inst.cover_side);
    for (int target = std::max(1, theta - 1); target <= std::min(inst.cover_side.size(), theta + 1); ++target)
      for (Engine e : {Engine::kRanked, Engine::kRing})
        CHECK(decide(inst.cover_side, inst.s, target, 7, e) == (theta <= target));
  }
}

TEST_CASE("co-K2-free modulators are a special case") {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_graph(9, 0.5, rng);
    // Matched vertices of a maximal matching: the rest is edgeless.
    const auto m = greedy_maximal_matching(g);
    VertexSet s;
    for (auto [a, b] : m.edges) {
      s.push_back(a);
      s.push_back(b);
    }
    std::sort(s.begin(), s.end());
    const int theta = oracle::clique_cover_number_exact(g);
    for (int target = 1; target <= g.size(); ++target) CHECK(decide(g, s, target, 3) == (theta <= target));
  }
}

TEST_CASE("determinism") {
  const auto inst = gen_planted_comodulator(10, 4, 5);
  const auto a = solve_clique_cover_with_modulator({inst.cover_side, inst.s, 5}, opts_with(9));
  const auto b = solve_clique_cover_with_modulator({inst.cover_side, inst.s, 5}, opts_with(9));
  CHECK(a.decision == b.decision);
  CHECK(a.types_tried == b.types_tried);
}
