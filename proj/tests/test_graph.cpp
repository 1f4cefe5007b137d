#include <algorithm>
#include <sstream>
#include <vector>

#include "bgcolor/errors.hpp"
#include "bgcolor/graph.hpp"
#include "bgcolor/oracle.hpp"
#include "bgcolor/structures.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bgcolor;
using bgcolor::testing::random_graph;

namespace {

Graph from_edges(int n, std::vector<Edge> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

bool has_triangle_brute(const Graph& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      for (int c = b + 1; c < g.size(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

}  // namespace

TEST_CASE("parse_dimacs") {
  const Graph g = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g == from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(parse_dimacs("p edge 1 0\n").size() == 1);
  CHECK(parse_dimacs("p edge 1 0\n").edge_count() == 0);
  CHECK_THROWS_AS((void)parse_dimacs("p edge 3 1\ne 1 5\n"), ParseError);
  CHECK_THROWS_AS((void)parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS((void)parse_dimacs("p edge 3 0\np edge 3 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
  // duplicates and reversed pairs merge
  CHECK(parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n").edge_count() == 1);
}

TEST_CASE("dimacs round trip") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(1 + i % 12, 0.4, rng);
    CHECK(parse_dimacs(to_dimacs(g)) == g);
  }
  CHECK(to_dimacs(from_edges(3, {{1, 2}, {0, 1}})) == "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("complement") {
  CHECK(complement(Graph(4)) == complete_graph(4));
  // C5 = 0-1-2-3-4-0 maps to 0-2-4-1-3-0
  CHECK(complement(cycle_graph(5)) == from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(i % 15, 0.5, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == g.size() * (g.size() - 1) / 2);
  }
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(complete_graph(4), {0, 1, 3}).graph == complete_graph(3));
  CHECK(induced_subgraph(petersen_graph(), {}).graph.size() == 0);
  const auto sub = induced_subgraph(cycle_graph(5), {0, 1, 2});
  CHECK(sub.graph == path_graph(3));
  CHECK(sub.to_original == VertexSet{0, 1, 2});
  CHECK_THROWS((void)induced_subgraph(cycle_graph(5), {7}));
}

TEST_CASE("greedy_triangle_packing") {
  auto k3 = greedy_triangle_packing(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3.triangles[0] == Triangle{0, 1, 2});
  CHECK(greedy_triangle_packing(cycle_graph(5)).size() == 0);
  auto k6 = greedy_triangle_packing(complete_graph(6));
  REQUIRE(k6.size() == 2);
  CHECK(k6.triangles[0] == Triangle{0, 1, 2});
  CHECK(k6.triangles[1] == Triangle{3, 4, 5});

  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(3 + i % 12, 0.5, rng);
    const auto t = greedy_triangle_packing(g);
    CHECK(verify_triangle_packing(g, t));
    VertexSet rest;
    const auto used = t.vertices();
    for (int v = 0; v < g.size(); ++v)
      if (!std::binary_search(used.begin(), used.end(), v)) rest.push_back(v);
    CHECK_FALSE(has_triangle_brute(induced_subgraph(g, rest).graph));
  }
}

TEST_CASE("greedy_maximal_matching") {
  const auto m = greedy_maximal_matching(path_graph(4));
  CHECK(m.edges == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(greedy_maximal_matching(complete_graph(3)).edges == std::vector<Edge>{{0, 1}});
  CHECK(greedy_maximal_matching(Graph(5)).size() == 0);
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(2 + i % 12, 0.3, rng);
    const auto mm = greedy_maximal_matching(g);
    CHECK(verify_matching(g, mm));
    std::vector<char> hit(static_cast<std::size_t>(g.size()), 0);
    for (auto [a, b] : mm.edges) hit[static_cast<std::size_t>(a)] = hit[static_cast<std::size_t>(b)] = 1;
    for (auto [a, b] : g.edges()) CHECK((hit[static_cast<std::size_t>(a)] || hit[static_cast<std::size_t>(b)]));
  }
}

TEST_CASE("maximum_matching") {
  CHECK(maximum_matching(complete_graph(4)).size() == 2);
  CHECK(maximum_matching(petersen_graph()).size() == 5);
  CHECK(oracle::maximum_matching_exact(petersen_graph()) == 5);
  CHECK(maximum_matching(star_graph(3)).size() == 1);
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(1 + i % 12, 0.1 + 0.1 * (i % 7), rng);
    const auto m = maximum_matching(g);
    CHECK(verify_matching(g, m));
    CHECK(static_cast<int>(m.size()) == oracle::maximum_matching_exact(g));
  }
  // blossom-heavy: odd cycles joined by bridges
  Graph g(30);
  for (int c = 0; c < 6; ++c)
    for (int j = 0; j < 5; ++j) g.add_edge(5 * c + j, 5 * c + (j + 1) % 5);
  for (int c = 0; c + 1 < 6; ++c) g.add_edge(5 * c + 2, 5 * (c + 1));
  CHECK(maximum_matching(g).size() == 15);
}

TEST_CASE("verify_clique_cover") {
  CHECK(verify_clique_cover(complete_graph(3), {{{0, 1, 2}}}));
  CHECK(verify_clique_cover(path_graph(3), {{{0, 1}, {2}}}));
  CHECK_FALSE(verify_clique_cover(path_graph(3), {{{0, 2}, {1}}}));
  CHECK_FALSE(verify_clique_cover(path_graph(3), {{{0, 1}}}));
  CHECK_FALSE(verify_clique_cover(path_graph(3), {{{0, 1}, {1, 2}}}));
  CHECK_FALSE(verify_clique_cover(path_graph(3), {{{0, 1}, {2}, {}}}));
  CHECK_FALSE(verify_clique_cover(path_graph(3), {{{0, 1}, {5}}}));
}

TEST_CASE("translate_cover_coloring") {
  const Graph c5 = cycle_graph(5);
  const Coloring three{{0, 1, 0, 1, 2}, 3};
  REQUIRE(verify_coloring(c5, three));
  const auto cover = std::get<CliqueCover>(translate_cover_coloring(c5, three));
  CHECK(cover.size() == 3);
  CHECK(verify_clique_cover(complement(c5), cover));
  const auto back = std::get<Coloring>(translate_cover_coloring(c5, cover));
  CHECK(back.palette_size == 3);
  CHECK(verify_coloring(c5, back));

  const Coloring distinct{{0, 1, 2, 3}, 4};
  const auto singles = std::get<CliqueCover>(translate_cover_coloring(path_graph(4), distinct));
  CHECK(singles.size() == 4);

  const auto one = std::get<CliqueCover>(translate_cover_coloring(Graph(4), Coloring{{0, 0, 0, 0}, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one.cliques[0] == VertexSet{0, 1, 2, 3});

  CHECK_THROWS((void)translate_cover_coloring(c5, Coloring{{0, 0, 1, 1, 2}, 3}));
  CHECK_THROWS((void)translate_cover_coloring(c5, CliqueCover{{{0, 1}, {2, 3, 4}}}));
}

TEST_CASE("guarantee_witness_coloring") {
  CHECK(guarantee_witness_coloring(complete_graph(6)).palette_size == 6);
  CHECK(guarantee_witness_coloring(Graph(9)).palette_size == 5);
  const Graph c5 = cycle_graph(5);
  const auto c = guarantee_witness_coloring(c5);
  CHECK(c.palette_size == 3);
  CHECK(verify_coloring(c5, c));

  Rng rng(123);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(1 + i % 12, 0.2 + 0.3 * (i % 3), rng);
    const auto col = guarantee_witness_coloring(g);
    CHECK(verify_coloring(g, col));
    const int omega = oracle::clique_number_exact(g);
    const int mu_bar = oracle::maximum_matching_exact(complement(g));
    CHECK(omega + mu_bar <= g.size());
    CHECK(col.palette_size <= omega + mu_bar);
  }
}

TEST_CASE("parse_vertex_list") {
  CHECK(parse_vertex_list("3,1", 5) == VertexSet{0, 2});
  CHECK(parse_vertex_list("", 5).empty());
  CHECK_THROWS((void)parse_vertex_list("0", 5));
  CHECK_THROWS((void)parse_vertex_list("6", 5));
  CHECK_THROWS((void)parse_vertex_list("a", 5));
}
