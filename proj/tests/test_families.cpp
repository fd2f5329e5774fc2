#include <gtest/gtest.h>

#include <set>

#include "cyclekit/cycles.hpp"
#include "cyclekit/families.hpp"
#include "cyclekit/graph_io.hpp"
#include "cyclekit/invariants.hpp"
#include "cyclekit/named_graphs.hpp"
#include "cyclekit/registry.hpp"
#include "oracles.hpp"

using namespace cyclekit;

namespace {

Graph make(const std::string& text) { return build(parse_family_spec(text)); }

int girth(const Graph& g) {
  int best = 0;
  oracle::each_cycle(g, [&](const std::vector<int>& c) {
    const int len = static_cast<int>(c.size());
    if (len >= 3 && (best == 0 || len < best)) best = len;
  });
  return best;
}

}  // namespace

TEST(FamilySpec, ParseAndPrint) {
  const auto s = parse_family_spec("H(a=1,b=2,t=4,k=3)");
  EXPECT_EQ(s.name, "H");
  EXPECT_EQ(s.params.at("k"), 3);
  EXPECT_EQ(s.to_string(), "H(a=1,b=2,k=3,t=4)");
  EXPECT_EQ(parse_family_spec("petersen").name, "petersen");
  EXPECT_THROW(parse_family_spec("H(a=1"), FamilyError);
}

TEST(Families, TwoCliquesAndHub) {
  const Graph g = make("join2Kd-K1(delta=3)");
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(degree_profile(g).min_degree, 3);
  EXPECT_FALSE(hamiltonian(g));
  for (int d = 1; d <= 6; ++d) {
    const Graph h = make("join2Kd-K1(delta=" + std::to_string(d) + ")");
    EXPECT_EQ(2 * degree_profile(h).min_degree, h.order() - 1);
  }
}

TEST(Families, LDelta) {
  const Graph g = make("L(delta=2)");
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(toughness(g).value, ExactNumber(1));
  EXPECT_EQ(toughness(g).value, oracle::toughness(g));
}

TEST(Families, Petersen) {
  const Graph g = make("petersen");
  EXPECT_EQ(g, petersen_graph());
  EXPECT_EQ(g.size(), 15);
  EXPECT_EQ(girth(g), 5);
}

TEST(Families, HGraphCounts) {
  // tK_a + Kbar_t has t*a + t vertices; K_b adds b more joined to k of Kbar_t.
  const Graph g = make("H(a=1,b=2,t=4,k=3)");
  EXPECT_EQ(g.order(), 4 * 1 + 4 + 2);
  EXPECT_EQ(g.size(), 0 + 4 * 4 * 1 + 1 + 3 * 2);
  EXPECT_EQ(vertex_connectivity(g).size, 3);
  EXPECT_THROW(make("H(a=1,b=2,t=2,k=3)"), FamilyError);
}

TEST(Families, CliqueJoins) {
  const Graph g = make("tKa_join_Kb(t=3,a=2,b=1)");
  EXPECT_EQ(g, join(copies(3, complete_graph(2)), complete_graph(1)));
  const Graph e = make("tKa_join_empty(t=2,a=3,b=2)");
  EXPECT_EQ(e, join(copies(2, complete_graph(3)), empty_graph(2)));
}

TEST(Families, GnIsToughButNotHamiltonian) {
  const Graph g = make("Gn(n=15,delta=5)");
  EXPECT_EQ(g.order(), 15);
  EXPECT_EQ(degree_profile(g).min_degree, 5);
  EXPECT_GE(toughness(g).value, ExactNumber(1));
  EXPECT_FALSE(hamiltonian(g));
  EXPECT_FALSE(hamiltonian_dp_oracle(g));
  EXPECT_THROW(make("Gn(n=14,delta=5)"), FamilyError);
  EXPECT_THROW(make("Gn(n=15,delta=6)"), FamilyError);
}

TEST(Families, GstarReplacesClique) {
  const Graph g = make("Gstar(n=15)");
  EXPECT_EQ(g.order(), 15);
  EXPECT_FALSE(hamiltonian_dp_oracle(g));
}

TEST(Families, NineEdgeGadget) {
  const Graph g = make("nineEdgeGadget");
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(vertex_connectivity(g).size, 2);
  EXPECT_FALSE(hamiltonian(g));
}

TEST(Families, ToughGadgets) {
  const Graph g = make("toughGadget");
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.size(), 10 + 10 + 5);
  // Deleting V_2 and x_1..x_4 leaves y_1..y_4 and the edge x_5 y_5.
  EXPECT_EQ(toughness(g).value, ExactNumber(6, 5));
  EXPECT_EQ(oracle::toughness(g), ExactNumber(6, 5));
  const Graph alt = make("toughGadgetAlt");
  EXPECT_TRUE(isomorphic(g, alt));
}

TEST(Families, TutteIsPlanarCubicNonHamiltonian) {
  const Graph g = make("tutte");
  EXPECT_EQ(g.order(), 46);
  EXPECT_EQ(g.size(), 69);
  EXPECT_EQ(vertex_connectivity(g).size, 3);
  EXPECT_TRUE(is_planar(g));
  EXPECT_FALSE(hamiltonian(g));
}

TEST(Families, MoonMoserIsBalancedBipartite) {
  const Graph g = make("moonMoser(n=12,delta=3)");
  EXPECT_EQ(g.order(), 12);
  EXPECT_TRUE(is_balanced_bipartite(g));
  EXPECT_EQ(degree_profile(g).min_degree, 3);
  EXPECT_FALSE(hamiltonian(g));
  EXPECT_TRUE(is_balanced_bipartite(make("moonMoserZ(n=12)")));
}

TEST(Families, SmallGadgets) {
  EXPECT_EQ(make("bridgedCliques(delta=3)").size(), 2 * 6 + 1);
  EXPECT_EQ(make("kttMinusStar(t=3)").size(), 9 - 2);
  EXPECT_EQ(make("cliquePendant(n=5)").size(), 6 + 1);
  const Graph claw = make("subdividedClaw(length=2)");
  EXPECT_EQ(claw.order(), 7);
  EXPECT_EQ(vertex_connectivity(claw).size, 1);
  EXPECT_EQ(make("windmill(lambda=3,t=2,r=1)").order(), 1 + 2 * 2 + 1);
}

TEST(Families, Deterministic) {
  for (const auto& info : list_families()) {
    if (!info.params.empty()) continue;
    EXPECT_EQ(encode_graph6(build({info.name, {}})), encode_graph6(build({info.name, {}}))) << info.name;
  }
  EXPECT_EQ(encode_graph6(make("H(a=2,b=3,t=4,k=2)")), encode_graph6(make("H(a=2,b=3,t=4,k=2)")));
}

TEST(Families, ErrorsNameTheProblem) {
  EXPECT_THROW(make("nosuchfamily"), FamilyError);
  EXPECT_THROW(make("complete"), FamilyError);
  EXPECT_THROW(make("cycle(n=2)"), FamilyError);
  try {
    make("Gn(n=16,delta=5)");
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos) << e.what();
  }
}

TEST(Families, ListingCoversCatalog) {
  std::set<std::string> names;
  for (const auto& f : list_families()) names.insert(f.name);
  EXPECT_TRUE(names.count("H"));
  EXPECT_TRUE(names.count("nineEdgeGadget"));
  EXPECT_TRUE(names.count("moonMoser"));
  for (const auto& f : list_families()) {
    for (const auto& id : f.cited_by) EXPECT_NE(find_theorem(id), nullptr) << f.name << " cites " << id;
  }
  // Every sharpness instance in the catalog names a listed family.
  for (const auto& thm : catalog()) {
    for (const auto& ex : thm.sharpness) {
      const int lo = ex.parameter.empty() ? 0 : ex.lo;
      const int hi = ex.parameter.empty() ? 0 : ex.hi;
      for (int v = lo; v <= hi; ++v) {
        for (const auto& inst : ex.instances(v)) EXPECT_TRUE(names.count(inst.spec.name)) << thm.id << " " << inst.spec.name;
      }
    }
  }
}

TEST(Families, HFifteenIsCited) {
  for (const auto& f : list_families()) {
    if (f.name == "H") {
      EXPECT_NE(std::find(f.cited_by.begin(), f.cited_by.end(), "Thm15"), f.cited_by.end());
    }
  }
}
