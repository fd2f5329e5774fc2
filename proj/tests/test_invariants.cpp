#include <gtest/gtest.h>

#include "corpus.hpp"
#include "cyclekit/invariants.hpp"
#include "cyclekit/named_graphs.hpp"
#include "oracles.hpp"

using namespace cyclekit;

namespace {

const ExactNumber kInf = ExactNumber::infinity();

std::vector<Graph> small_corpus() { return corpus::gnp(300, {1, 2, 4, 5, 6, 7, 8, 9}, {0.2, 0.5, 0.8}, 21); }

}  // namespace

TEST(ExactNumber, ReducedForm) {
  const ExactNumber x(6, -4);
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(ExactNumber(4, 2), ExactNumber(2));
  EXPECT_THROW(ExactNumber(1, 0), ArithmeticError);
}

TEST(ExactNumber, Arithmetic) {
  EXPECT_EQ(ExactNumber(1, 2) + ExactNumber(1, 3), ExactNumber(5, 6));
  EXPECT_EQ(ExactNumber(1, 2) - ExactNumber(1, 3), ExactNumber(1, 6));
  EXPECT_EQ(ExactNumber(2, 3) * ExactNumber(3, 4), ExactNumber(1, 2));
  EXPECT_EQ(ExactNumber(2, 3) / ExactNumber(4), ExactNumber(1, 6));
  EXPECT_EQ(-ExactNumber(1, 2), ExactNumber(-1, 2));
  EXPECT_THROW(ExactNumber(1) / ExactNumber(0), ArithmeticError);
}

TEST(ExactNumber, InfinityRules) {
  EXPECT_GT(kInf, ExactNumber(1'000'000));
  EXPECT_EQ(kInf + ExactNumber(5), kInf);
  EXPECT_EQ(kInf * ExactNumber(1, 2), kInf);
  EXPECT_EQ(kInf.floor(), kInf);
  EXPECT_THROW(ExactNumber(3) / kInf, ArithmeticError);
  EXPECT_THROW(kInf - kInf, ArithmeticError);
  EXPECT_THROW(kInf * ExactNumber(0), ArithmeticError);
  EXPECT_THROW(ExactNumber(-1) * kInf, ArithmeticError);
  EXPECT_EQ(kInf.to_string(), "inf");
  EXPECT_EQ(min(kInf, ExactNumber(2)), ExactNumber(2));
}

TEST(ExactNumber, FloorCeilAndParse) {
  EXPECT_EQ(ExactNumber(7, 2).floor(), ExactNumber(3));
  EXPECT_EQ(ExactNumber(7, 2).ceil(), ExactNumber(4));
  EXPECT_EQ(ExactNumber(-7, 2).floor(), ExactNumber(-4));
  EXPECT_EQ(ExactNumber(-7, 2).ceil(), ExactNumber(-3));
  EXPECT_EQ(ExactNumber::parse("4/6"), ExactNumber(2, 3));
  EXPECT_EQ(ExactNumber::parse("-5"), ExactNumber(-5));
  EXPECT_EQ(ExactNumber::parse("inf"), kInf);
  EXPECT_THROW(ExactNumber::parse("x"), std::invalid_argument);
}

TEST(ExactNumber, OverflowIsReported) {
  const ExactNumber big(std::int64_t{1} << 62);
  EXPECT_THROW(big * ExactNumber(4), ArithmeticError);
}

TEST(DegreeProfile, Examples) {
  const auto p = degree_profile(petersen_graph());
  EXPECT_EQ(p.order, 10);
  EXPECT_EQ(p.size, 15);
  EXPECT_EQ(p.min_degree, 3);
  EXPECT_EQ(p.max_degree, 3);
  const auto k34 = degree_profile(complete_bipartite(3, 4));
  EXPECT_EQ(k34.size, 12);
  EXPECT_EQ(k34.min_degree, 3);
  EXPECT_EQ(k34.max_degree, 4);
  EXPECT_EQ(degree_profile(complete_graph(1)).min_degree, 0);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(complete_bipartite(3, 4), 2), ExactNumber(6));
  EXPECT_EQ(sigma(complete_graph(5), 2), kInf);
  EXPECT_EQ(sigma(petersen_graph(), 4), ExactNumber(12));
  EXPECT_EQ(sigma(petersen_graph(), 5), kInf);
}

TEST(DeltaAtDistance, Examples) {
  EXPECT_EQ(delta_at_distance(cycle_graph(5), 2), ExactNumber(2));
  EXPECT_EQ(delta_at_distance(petersen_graph(), 2), ExactNumber(3));
  EXPECT_EQ(delta_at_distance(complete_graph(5), 2), kInf);
  // Pairs in different components are at no finite distance.
  EXPECT_EQ(delta_at_distance(copies(2, complete_graph(3)), 2), kInf);
}

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(petersen_graph()).size, 3);
  EXPECT_EQ(vertex_connectivity(join(copies(2, complete_graph(3)), complete_graph(1))).size, 1);
  EXPECT_EQ(vertex_connectivity(complete_graph(5)).size, 4);
  EXPECT_EQ(vertex_connectivity(copies(2, complete_graph(2))).size, 0);
  EXPECT_EQ(vertex_connectivity(complete_graph(1)).size, 0);
}

TEST(Connectivity, CutSeparates) {
  for (const auto& g : small_corpus()) {
    const auto k = vertex_connectivity(g);
    if (k.cut.empty()) continue;
    EXPECT_EQ(k.cut.size(), k.size);
    EXPECT_GT(component_count(g, g.vertices() - k.cut), 1);
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(maximum_independent_set(petersen_graph()).size, 4);
  EXPECT_EQ(maximum_independent_set(complete_graph(6)).size, 1);
  EXPECT_EQ(maximum_independent_set(empty_graph(6)).size, 6);
}

TEST(Toughness, Examples) {
  EXPECT_EQ(toughness(petersen_graph()).value, ExactNumber(4, 3));
  EXPECT_EQ(toughness(complete_bipartite(3, 4)).value, ExactNumber(3, 4));
  EXPECT_EQ(toughness(complete_graph(6)).value, kInf);
  EXPECT_EQ(toughness(complete_graph(1)).value, kInf);
  EXPECT_EQ(toughness(empty_graph(3)).value, ExactNumber(0));
}

TEST(Toughness, WitnessAttainsValue) {
  for (const auto& g : small_corpus()) {
    const auto t = toughness(g);
    if (t.value.is_infinite()) continue;
    const int s = component_count(g, g.vertices() - t.cut);
    EXPECT_EQ(s, t.components);
    EXPECT_EQ(ExactNumber(t.cut.size(), s), t.value);
  }
}

TEST(Toughness, AtMostHalfConnectivity) {
  for (const auto& g : small_corpus()) {
    const auto t = toughness(g).value;
    if (t.is_infinite()) continue;
    EXPECT_LE(t, ExactNumber(vertex_connectivity(g).size, 2));
  }
}

TEST(BindingNumber, Examples) {
  EXPECT_EQ(binding_number(star_graph(3)).value, ExactNumber(1, 3));
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(binding_number(complete_graph(n)).value, ExactNumber(n - 1));
  EXPECT_EQ(binding_number(cycle_graph(4)).value, ExactNumber(1));
}

TEST(BindingNumber, WitnessAttainsValue) {
  for (const auto& g : small_corpus()) {
    const auto b = binding_number(g);
    if (b.value.is_infinite()) continue;
    const VertexSet nb = g.neighborhood(b.witness);
    EXPECT_NE(nb, g.vertices());
    EXPECT_EQ(ExactNumber(nb.size(), b.witness.size()), b.value);
  }
}

TEST(InvariantOracles, MatchNaiveDefinitions) {
  for (const auto& g : small_corpus()) {
    EXPECT_EQ(maximum_independent_set(g).size, oracle::alpha(g));
    EXPECT_EQ(vertex_connectivity(g).size, oracle::kappa(g));
    EXPECT_EQ(toughness(g).value, oracle::toughness(g));
    EXPECT_EQ(binding_number(g).value, oracle::binding(g));
    for (int t = 1; t <= 3; ++t) {
      EXPECT_EQ(sigma(g, t), oracle::sigma(g, t));
      EXPECT_EQ(delta_at_distance(g, t), oracle::delta_t(g, t));
    }
  }
}

TEST(InvariantChain, HoldsOnConnectedGraphs) {
  for (const auto& g : small_corpus()) {
    if (g.order() < 3 || !is_connected(g)) continue;
    const int d = degree_profile(g).min_degree;
    EXPECT_LE(vertex_connectivity(g).size, d);
    const ExactNumber s2 = sigma(g, 2);
    const ExactNumber s3 = sigma(g, 3);
    if (!s2.is_infinite()) {
      EXPECT_LE(ExactNumber(2 * d), s2);
    }
    if (!s2.is_infinite() && !s3.is_infinite()) {
      EXPECT_LE(s2 * ExactNumber(3), s3 * ExactNumber(2));
    }
    const ExactNumber d2 = delta_at_distance(g, 2);
    if (!d2.is_infinite()) {
      EXPECT_LE(ExactNumber(d), d2);
    }
  }
}

TEST(InvariantReport, DegreeIdentities) {
  for (const auto& g : small_corpus()) {
    const auto r = compute_report(g);
    EXPECT_EQ(r.sigma.at(1), ExactNumber(r.degrees.min_degree));
    EXPECT_LE(r.degrees.min_degree * g.order(), 2 * g.size());
    EXPECT_LE(r.connectivity, r.degrees.min_degree);
  }
}

TEST(InvariantReport, DeltaOneIsOverEdges) {
  // Under the distance reading delta_1 takes the larger degree of an edge,
  // so it can exceed the minimum degree.
  EXPECT_EQ(delta_at_distance(star_graph(3), 1), ExactNumber(3));
  EXPECT_EQ(delta_at_distance(empty_graph(3), 1), kInf);
}

TEST(InvariantReport, PetersenText) {
  const auto r = compute_report(petersen_graph());
  const std::string text = format_report_text(r);
  EXPECT_NE(text.find("toughness 4/3"), std::string::npos) << text;
  EXPECT_NE(text.find("independence 4"), std::string::npos) << text;
  const std::string records = format_report_records(r);
  EXPECT_NE(records.find("\"key\":\"toughness\""), std::string::npos) << records;
}

TEST(InvariantReport, SigmaReadingFlag) {
  // K_{2,2,2} has alpha = 2 < kappa = 4, so sigma_2 is finite only under alpha < t.
  const Graph octahedron = complement(copies(3, complete_graph(2)));
  const auto r = compute_report(octahedron);
  EXPECT_EQ(r.sigma.at(2), ExactNumber(8));
  EXPECT_TRUE(r.sigma_reading_differs);
  EXPECT_FALSE(compute_report(cycle_graph(6)).sigma_reading_differs);
}
