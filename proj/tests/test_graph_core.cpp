#include <gtest/gtest.h>

#include <sstream>

#include "corpus.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/graph_io.hpp"
#include "cyclekit/named_graphs.hpp"
#include "oracles.hpp"

using namespace cyclekit;

namespace {

Graph two_triangles_and_hub() { return join(copies(2, complete_graph(3)), complete_graph(1)); }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s = VertexSet::of({0, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.to_string(), "{0 3 5}");
  EXPECT_EQ((s - VertexSet::single(0)).first(), 3);
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_TRUE(VertexSet::of({3}).is_subset_of(s));
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 3, 5}));
}

TEST(FromEdgeList, Triangle) {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(FromEdgeList, EdgelessAndCycle) {
  EXPECT_EQ(Graph::from_edge_list(2, {}).size(), 0);
  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(c5.size(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
}

TEST(FromEdgeList, DuplicatesCollapse) {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1);
}

TEST(FromEdgeList, RejectsBadPairs) {
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{-1, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(65), GraphError);
}

TEST(Join, TwoTrianglesAndHub) {
  const Graph g = two_triangles_and_hub();
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(g.degree(6), 6);
}

TEST(Join, IdentityAndBipartite) {
  const Graph p = petersen_graph();
  EXPECT_EQ(join(Graph(), p), p);
  EXPECT_TRUE(isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
}

TEST(Join, EdgeCountFormulaOnRandomPairs) {
  auto graphs = corpus::gnp(60, {0, 1, 3, 4, 5}, {0.3, 0.7}, 11);
  for (std::size_t i = 0; i + 1 < graphs.size(); i += 2) {
    const Graph& a = graphs[i];
    const Graph& b = graphs[i + 1];
    const Graph j = join(a, b);
    EXPECT_EQ(j.size(), a.size() + b.size() + a.order() * b.order());
    EXPECT_EQ(static_cast<int>(j.edges().size()), j.size());
  }
}

TEST(Join, AssociativeUpToIsomorphism) {
  auto graphs = corpus::gnp(30, {1, 2, 3}, {0.5}, 12);
  for (std::size_t i = 0; i + 2 < graphs.size(); i += 3) {
    const Graph& a = graphs[i];
    const Graph& b = graphs[i + 1];
    const Graph& c = graphs[i + 2];
    EXPECT_TRUE(isomorphic(join(join(a, b), c), join(a, join(b, c))));
  }
}

TEST(DisjointUnion, Examples) {
  const Graph m = copies(3, complete_graph(2));
  EXPECT_EQ(m.order(), 6);
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(component_count(m), 3);
  EXPECT_EQ(disjoint_union(std::span<const Graph>()).order(), 0);
  const Graph u = disjoint_union(complete_graph(3), empty_graph(2));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 3);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)).size(), 0);
  EXPECT_TRUE(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_EQ(complement(empty_graph(3)), complete_graph(3));
}

TEST(Complement, Involution) {
  for (const auto& g : corpus::gnp(40, {0, 1, 5, 9}, {0.2, 0.6}, 13)) EXPECT_EQ(complement(complement(g)), g);
}

TEST(Power, Examples) {
  EXPECT_EQ(power(path_graph(3), 2), complete_graph(3));
  EXPECT_EQ(power(cycle_graph(4), 2), complete_graph(4));
  const Graph p = petersen_graph();
  EXPECT_EQ(power(p, 1), p);
  EXPECT_EQ(power(p, 2), complete_graph(10));
  EXPECT_THROW(power(p, 0), std::invalid_argument);
}

TEST(Power, MonotoneAndMatchesDistances) {
  for (const auto& g : corpus::gnp(30, {6, 8, 10}, {0.15, 0.3}, 14)) {
    const auto d = oracle::distances(g);
    for (int k = 1; k <= 4; ++k) {
      const Graph pk = power(g, k);
      const Graph next = power(g, k + 1);
      for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) {
          if (u == v) continue;
          EXPECT_EQ(pk.adjacent(u, v), d[u][v] >= 1 && d[u][v] <= k);
          if (pk.adjacent(u, v)) {
            EXPECT_TRUE(next.adjacent(u, v));
          }
        }
      }
    }
  }
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(petersen_graph(), 0, 1), 1);
  EXPECT_EQ(distance(cycle_graph(5), 0, 2), 2);
  EXPECT_EQ(distance(copies(2, complete_graph(3)), 0, 4), std::nullopt);
}

TEST(Distance, MatchesFloydWarshall) {
  for (const auto& g : corpus::gnp(30, {5, 9, 12}, {0.2, 0.4}, 15)) {
    const auto d = oracle::distances(g);
    for (int u = 0; u < g.order(); ++u) {
      const auto row = distances_from(g, u);
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(row[v], d[u][v]);
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(component_count(copies(3, complete_graph(2))), 3);
  const Graph g = two_triangles_and_hub();
  EXPECT_EQ(component_count(g.delete_vertices(VertexSet::single(6))), 2);
  EXPECT_EQ(component_count(Graph()), 0);
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(g));
}

TEST(Components, MatchNaiveFlooding) {
  for (const auto& g : corpus::gnp(50, {4, 8, 12}, {0.1, 0.25}, 16)) {
    EXPECT_EQ(component_count(g), oracle::components(g, oracle::all(g)));
    EXPECT_EQ(static_cast<int>(components(g).size()), component_count(g));
  }
}

TEST(Induced, RelabelsInOrder) {
  const Graph g = cycle_graph(5);
  const Graph h = g.induced(VertexSet::of({0, 1, 2}));
  EXPECT_EQ(h, path_graph(3));
}

TEST(Isomorphism, FindsMapping) {
  const Graph g = petersen_graph();
  std::vector<Edge> moved;
  for (auto [u, v] : g.edges()) moved.emplace_back((3 * u + 1) % 10, (3 * v + 1) % 10);
  const Graph h = Graph::from_edge_list(10, moved);
  auto map = find_isomorphism(g, h);
  ASSERT_TRUE(map);
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.adjacent((*map)[u], (*map)[v]));
  EXPECT_FALSE(isomorphic(cycle_graph(6), copies(2, complete_graph(3))));
}

TEST(Graph6, CompleteGraphFixtures) {
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Graph6, ReferenceFixtures) {
  const auto fixtures = corpus::reference_fixtures();
  ASSERT_GT(fixtures.size(), 100U);
  for (const auto& f : fixtures) {
    const Graph expected = Graph::from_edge_list(f.n, f.edges);
    EXPECT_EQ(parse_graph6(f.graph6), expected) << f.graph6;
    EXPECT_EQ(encode_graph6(expected), f.graph6);
  }
}

TEST(Graph6, MatchesReferenceEncoderAndRoundTrips) {
  for (const auto& g : corpus::gnp(300, {0, 1, 2, 7, 12, 30, 63, 64}, {0.1, 0.5, 0.9}, 17)) {
    const std::string s = encode_graph6(g);
    EXPECT_EQ(s, oracle::graph6(g));
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(encode_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);     // missing data
  EXPECT_THROW(parse_graph6("Bww"), ParseError);   // extra data
  EXPECT_THROW(parse_graph6("Bx"), ParseError);    // nonzero padding
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError); // outside the printable range
  EXPECT_THROW(parse_graph6("~?@@"), ParseError);  // order 65
}

TEST(EdgeList, ParseAndEncode) {
  const Graph g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_EQ(parse_edge_list(encode_edge_list(petersen_graph())), petersen_graph());
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
}

TEST(Dimacs, OneBasedInput) {
  const Graph g = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g, path_graph(3));
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 0 1\n"), ParseError);
}

TEST(ReadGraphs, AutoDetectsFormats) {
  std::istringstream g6("Bw\nC~\n\n");
  const auto many = read_graphs(g6);
  ASSERT_EQ(many.size(), 2U);
  EXPECT_EQ(many[1], complete_graph(4));
  std::istringstream el("2 1\n0 1\n");
  EXPECT_EQ(read_graphs(el).front(), complete_graph(2));
  std::istringstream dm("p edge 2 1\ne 1 2\n");
  EXPECT_EQ(read_graphs(dm).front(), complete_graph(2));
}
