#include <gtest/gtest.h>

#include <numeric>

#include "corpus.hpp"
#include "cyclekit/named_graphs.hpp"
#include "cyclekit/structure.hpp"
#include "oracles.hpp"

using namespace cyclekit;

namespace {

// Tries every injective map V(H) -> V(G).
bool naive_contains(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > n) return false;
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = h.adjacent(i, j) == g.adjacent(v, map[j]);
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

Graph grid(int rows, int cols) {
  GraphBuilder b(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) b.add_edge(v, v + 1);
      if (r + 1 < rows) b.add_edge(v, v + cols);
    }
  }
  return std::move(b).build();
}

}  // namespace

TEST(Patterns, Definitions) {
  EXPECT_EQ(claw_pattern().graph, star_graph(3));
  EXPECT_EQ(net_pattern(0, 0, 0).graph, complete_graph(3));
  const Graph net = net_graph(1, 1, 1);
  EXPECT_EQ(net.order(), 6);
  EXPECT_EQ(net.size(), 6);
  EXPECT_EQ(path_pattern(6).graph, path_graph(6));
  EXPECT_EQ(complete_bipartite_pattern(3, 3).graph, complete_bipartite(3, 3));
  EXPECT_EQ(petersen_pattern().graph, petersen_graph());
}

TEST(Patterns, ParseTokens) {
  EXPECT_EQ(parse_pattern("claw").graph, star_graph(3));
  EXPECT_EQ(parse_pattern("P6").graph, path_graph(6));
  EXPECT_EQ(parse_pattern("C5").graph, cycle_graph(5));
  EXPECT_EQ(parse_pattern("K5").graph, complete_graph(5));
  EXPECT_EQ(parse_pattern("K33").graph, complete_bipartite(3, 3));
  EXPECT_EQ(parse_pattern("K_2_3").graph, complete_bipartite(2, 3));
  EXPECT_EQ(parse_pattern("Kbar3").graph, empty_graph(3));
  EXPECT_EQ(parse_pattern("N_0_1_2").graph, net_graph(0, 1, 2));
  EXPECT_EQ(parse_pattern("triangle").graph, complete_graph(3));
  EXPECT_EQ(parse_pattern_list("claw,P6").size(), 2U);
  EXPECT_THROW(parse_pattern("hexagon"), std::invalid_argument);
}

TEST(Induced, Examples) {
  const auto w = contains_induced(petersen_graph(), claw_pattern());
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_induced_map(petersen_graph(), star_graph(3), *w));
  EXPECT_FALSE(contains_induced(cycle_graph(5), claw_pattern()));
  EXPECT_TRUE(contains_induced(path_graph(7), path_pattern(6)));
  EXPECT_FALSE(contains_induced(path_graph(3), path_pattern(4)));
}

TEST(Induced, Freeness) {
  const std::vector<PatternGraph> triangle{net_pattern(0, 0, 0)};
  EXPECT_TRUE(is_free(petersen_graph(), triangle));
  const std::vector<PatternGraph> p3{path_pattern(3)};
  EXPECT_TRUE(is_free(complete_graph(3), p3));
  EXPECT_TRUE(is_free(copies(3, complete_graph(4)), p3));
  const std::vector<PatternGraph> claw{claw_pattern()};
  EXPECT_FALSE(is_free(star_graph(3), claw));
}

TEST(Induced, MatchesNaiveInjections) {
  const std::vector<PatternGraph> patterns{claw_pattern(),     path_pattern(4),       cycle_pattern(4),
                                           cycle_pattern(5),   net_pattern(0, 0, 1),  complete_bipartite_pattern(2, 3),
                                           empty_pattern(3),   complete_pattern(4)};
  for (const auto& g : corpus::gnp(200, {4, 6, 8, 10}, {0.3, 0.5, 0.7}, 31)) {
    for (const auto& h : patterns) {
      const auto w = contains_induced(g, h);
      EXPECT_EQ(w.has_value(), naive_contains(g, h.graph)) << h.name;
      if (w) {
        EXPECT_TRUE(verify_induced_map(g, h.graph, *w));
      }
    }
  }
}

TEST(Induced, FreenessIsAntitone) {
  // P_4 is induced in P_5, so P_4-free implies P_5-free; likewise for the nets.
  const std::vector<std::pair<PatternGraph, PatternGraph>> chains{
      {path_pattern(4), path_pattern(5)},
      {path_pattern(5), path_pattern(6)},
      {net_pattern(0, 0, 0), net_pattern(0, 0, 1)},
      {net_pattern(0, 0, 1), net_pattern(0, 1, 1)},
      {path_pattern(4), net_pattern(1, 1, 1)},
  };
  for (const auto& [weak, strong] : chains) ASSERT_TRUE(find_induced(strong.graph, weak.graph));
  for (const auto& g : corpus::gnp(200, {6, 8, 10}, {0.3, 0.6}, 32)) {
    for (const auto& [weak, strong] : chains) {
      const std::vector<PatternGraph> a{weak};
      const std::vector<PatternGraph> b{strong};
      if (is_free(g, a)) {
        EXPECT_TRUE(is_free(g, b));
      }
    }
  }
}

TEST(Classes, CycleFour) {
  const auto f = class_predicates(cycle_graph(4));
  EXPECT_TRUE(f.bipartite);
  EXPECT_TRUE(f.balanced_bipartite);
  EXPECT_TRUE(f.regular);
  EXPECT_FALSE(f.chordal);
  EXPECT_FALSE(f.split);
  EXPECT_TRUE(f.planar);
  EXPECT_TRUE(f.connected);
}

TEST(Classes, KuratowskiGraphsAndClaw) {
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_planar(petersen_graph()));
  EXPECT_TRUE(is_planar(grid(5, 6)));
  const auto f = class_predicates(star_graph(3));
  EXPECT_TRUE(f.split);
  EXPECT_TRUE(f.chordal);
  EXPECT_TRUE(f.planar);
}

TEST(Classes, KuratowskiWitness) {
  for (const Graph& g : {complete_graph(5), complete_bipartite(3, 3), petersen_graph(), complete_graph(7)}) {
    const auto k = kuratowski_subgraph(g);
    ASSERT_TRUE(k);
    EXPECT_TRUE(is_kuratowski_subdivision(*k));
    for (auto [u, v] : k->edges()) EXPECT_TRUE(g.adjacent(u, v));
  }
  EXPECT_FALSE(kuratowski_subgraph(grid(4, 4)));
}

TEST(Classes, PlanarFacesSatisfyEuler) {
  const Graph g = grid(3, 4);
  const auto faces = planar_faces_biconnected(g);
  ASSERT_TRUE(faces);
  EXPECT_EQ(g.order() - g.size() + static_cast<int>(faces->size()), 2);
}

TEST(Classes, PlanarityRespectsEulerBound) {
  for (const auto& g : corpus::gnp(200, {5, 7, 9, 12}, {0.3, 0.5, 0.8}, 33)) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) {
      EXPECT_FALSE(is_planar(g));
    }
    if (!is_planar(g)) {
      const auto k = kuratowski_subgraph(g);
      ASSERT_TRUE(k);
      EXPECT_TRUE(is_kuratowski_subdivision(*k));
    }
  }
}

TEST(Classes, Bipartition) {
  const auto b = bipartition(complete_bipartite(2, 3));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->left.size() + b->right.size(), 5);
  EXPECT_FALSE(bipartition(cycle_graph(5)));
  EXPECT_FALSE(is_balanced_bipartite(complete_bipartite(2, 3)));
  // Balance may need the components' sides swapped.
  EXPECT_TRUE(is_balanced_bipartite(disjoint_union(complete_bipartite(1, 2), complete_bipartite(2, 1))));
}

TEST(Classes, ChordalOrderingIsValid) {
  for (const auto& g : corpus::gnp(200, {5, 8, 11}, {0.3, 0.6, 0.9}, 34)) {
    const auto peo = perfect_elimination_ordering(g);
    if (peo) {
      EXPECT_TRUE(verify_perfect_elimination_ordering(g, *peo));
    }
    // Chordal graphs contain no induced C_4 or C_5.
    if (is_chordal(g)) {
      EXPECT_FALSE(contains_induced(g, cycle_pattern(4)));
      EXPECT_FALSE(contains_induced(g, cycle_pattern(5)));
    }
    // Split iff the graph and its complement are both chordal.
    EXPECT_EQ(is_split(g), is_chordal(g) && is_chordal(complement(g)));
  }
}

TEST(Classes, Blocks) {
  const Graph g = join(copies(2, complete_graph(3)), complete_graph(1));
  const auto blocks = biconnected_blocks(g);
  EXPECT_EQ(blocks.size(), 2U);
  for (const auto& b : blocks) EXPECT_EQ(b.size(), 4);
}
