#include <algorithm>

#include "cyclekit/named_graphs.hpp"
#include "cyclekit/registry.hpp"

namespace cyclekit {

namespace {

using namespace sym;
using R = Relation;
using Gen = std::function<std::vector<AuditInstance>(int)>;
using Instances = std::vector<AuditInstance>;

FamilySpec fam(std::string name, std::map<std::string, int> params = {}) { return {std::move(name), std::move(params)}; }
// tK_a + K_b
FamilySpec cliques(int t, int a, int b) { return fam("tKa_join_Kb", {{"t", t}, {"a", a}, {"b", b}}); }
// tK_a + Kbar_b
FamilySpec cliques_empty(int t, int a, int b) { return fam("tKa_join_empty", {{"t", t}, {"a", a}, {"b", b}}); }
FamilySpec hgraph(int a, int b, int t, int k) { return fam("H", {{"a", a}, {"b", b}, {"t", t}, {"k", k}}); }
FamilySpec kab(int a, int b) { return fam("completeBipartite", {{"a", a}, {"b", b}}); }
FamilySpec ldelta(int d) { return fam("L", {{"delta", d}}); }

SharpnessExample example(std::string label, Role role, std::string premise, std::string parameter, int lo, int hi,
                         Gen gen) {
  SharpnessExample e;
  e.label = std::move(label);
  e.role = role;
  e.premise = std::move(premise);
  e.parameter = std::move(parameter);
  e.lo = lo;
  e.hi = hi;
  e.instances = std::move(gen);
  return e;
}

SharpnessExample fixed(std::string label, Role role, std::string premise, FamilySpec spec,
                       std::optional<int> lambda = std::nullopt) {
  return example(std::move(label), role, std::move(premise), "", 0, 0,
                 [spec, lambda](int) { return Instances{{spec, lambda}}; });
}

SharpnessExample replaced(SharpnessExample e, Premise p) {
  e.replacement = std::move(p);
  return e;
}

SharpnessExample note(SharpnessExample e, std::string text) {
  e.note = std::move(text);
  return e;
}

// One instance per parameter value when `ok` holds.
Gen when(std::function<bool(int)> ok, std::function<FamilySpec(int)> make,
         std::function<std::optional<int>(int)> lambda = nullptr) {
  return [ok, make, lambda](int v) {
    if (!ok(v)) return Instances{};
    return Instances{{make(v), lambda ? lambda(v) : std::nullopt}};
  };
}

std::optional<int> same(int v) { return v; }

Premise kappa_ge(E k) { return relation("kappa", kappa, R::kGe, std::move(k)); }
Premise delta_ge(E rhs) { return relation("delta", delta, R::kGe, std::move(rhs)); }
Premise tau_ge(E rhs) { return relation("tau", tau, R::kGe, std::move(rhs)); }
Premise tau_gt(E rhs) { return relation("tau", tau, R::kGt, std::move(rhs)); }
Premise q_ge(E rhs) { return relation("q", q, R::kGe, std::move(rhs)); }
Premise q_gt(E rhs) { return relation("q", q, R::kGt, std::move(rhs)); }
Premise balanced() { return in_class("balanced", GraphClass::kBalancedBipartite); }
Premise claw_and(PatternGraph s) { return free_of("free", {claw_pattern(), std::move(s)}); }

E min_n(E x) { return min(n, std::move(x)); }

struct Builder {
  std::vector<TheoremSpec> list;

  TheoremSpec& add(std::string id, std::string citation, std::vector<Premise> premises, Conclusion conclusion) {
    TheoremSpec t;
    t.id = std::move(id);
    t.citation = std::move(citation);
    t.premises = std::move(premises);
    t.conclusion = std::move(conclusion);
    list.push_back(std::move(t));
    return list.back();
  }
};

// Hamilton cycle entries.
void hamilton(Builder& b) {
  {
    auto& t = b.add("Thm1", "Erdos and Gallai, 1959 [27]", {q_ge((n * n - 3 * n + 5) / 2)}, hamiltonian_conclusion());
    t.sharpness = {example("K_{n-1} with one vertex joined to K_1", Role::kPremiseTight, "q", "n", 3, 8,
                           when([](int) { return true; }, [](int v) { return fam("cliquePendant", {{"n", v}}); }))};
  }
  {
    const E m = floor((n - 1) / 2);
    auto& t = b.add("Thm2", "Erdos, 1962 [26]",
                    {relation("delta", delta, R::kGe, 1), relation("delta-max", delta, R::kLe, n / 2),
                     q_gt(max((n - delta) * (n - delta - 1) / 2 + delta * delta, (n - m) * (n - m - 1) / 2 + m * m))},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("K_{n-delta} with delta vertices joined to delta independent vertices, n = 2delta+1",
                Role::kPremiseTight, "q", "delta", 1, 5,
                when([](int v) { return v >= 1; },
                     [](int v) { return fam("erdosExtremal", {{"n", 2 * v + 1}, {"delta", v}}); })),
        example("K_{n-delta} with delta vertices joined to delta independent vertices, delta = 1",
                Role::kPremiseTight, "q", "n", 3, 8,
                when([](int v) { return v >= 3; },
                     [](int v) { return fam("erdosExtremal", {{"n", v}, {"delta", 1}}); })),
    };
  }
  {
    auto& t = b.add("Thm3", "Moon and Moser, 1963 [51]", {balanced(), q_ge((n * n - 2 * n + 5) / 4)},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("K_{t,t} minus t-1 edges at a common vertex", Role::kPremiseTight, "q", "t", 2, 6,
                when([](int v) { return v >= 2; }, [](int v) { return fam("kttMinusStar", {{"t", v}}); })),
        example("K_{t,t+1} (balance cannot be removed)", Role::kPremiseNecessary, "balanced", "t", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
    };
  }
  {
    auto& t = b.add("Thm4", "Moon and Moser, 1963 [51]", {balanced(), q_gt(n * (n - 2 * delta) / 4 + delta * delta)},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("X = P u Q, Y = R u S, N(P) = R, N(Q) = Y; n = 2delta+2", Role::kPremiseTight, "q", "delta", 1, 5,
                when([](int v) { return v >= 1; },
                     [](int v) { return fam("moonMoser", {{"n", 2 * v + 2}, {"delta", v}}); })),
        example("X = P u Q, Y = R u S, N(P) = R, N(Q) = Y; delta = 1", Role::kPremiseTight, "q", "n/2", 2, 6,
                when([](int v) { return v >= 2; },
                     [](int v) { return fam("moonMoser", {{"n", 2 * v}, {"delta", 1}}); })),
        example("K_{t,t+1} (balance cannot be removed)", Role::kPremiseNecessary, "balanced", "t", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
    };
  }
  {
    auto& t = b.add("Thm5", "Nikoghosyan, 2011 [58]", {relation("q", q, R::kLe, delta * delta + delta - 1)},
                    hamiltonian_conclusion());
    t.sharpness = {example("K_1 + 2K_delta", Role::kPremiseTight, "q", "delta", 1, 5,
                           when([](int v) { return v >= 1; }, [](int v) { return cliques(2, v, 1); }))};
  }
  {
    auto& t = b.add("Thm6", "Dirac, 1952 [23]", {delta_ge(n / 2)}, hamiltonian_conclusion());
    t.aliases = {"c8", "g2"};
    t.sharpness = {example("2K_delta + K_1", Role::kPremiseTight, "delta", "delta", 2, 5,
                           when([](int v) { return v >= 1; }, [](int v) { return fam("join2Kd-K1", {{"delta", v}}); }))};
  }
  {
    auto& t = b.add("Thm7", "Moon and Moser, 1963 [51]", {balanced(), delta_ge((n + 1) / 4)}, hamiltonian_conclusion());
    t.sharpness = {
        replaced(fixed("three x-y-z-w paths with common ends", Role::kPremiseTight, "delta", fam("thetaGadget")),
                 delta_ge(n / 4)),
        example("K_{t,t+1} (balance cannot be removed)", Role::kPremiseNecessary, "balanced", "t", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
    };
  }
  {
    auto& t = b.add("Thm8", "Jung, 1978 [39]", {tau_ge(1), delta_ge((n - 4) / 2)}, hamiltonian_conclusion());
    t.n_floor = 11;
    t.sharpness = {
        fixed("Petersen graph", Role::kPremiseNecessary, "n", fam("petersen")),
        example("K_{delta,delta+1}", Role::kPremiseNecessary, "tau", "delta", 5, 7,
                when([](int v) { return v >= 5; }, [](int v) { return kab(v, v + 1); })),
        example("G*_n", Role::kPremiseTight, "delta", "n", 15, 17,
                when([](int v) { return v >= 15 && v % 2 == 1; }, [](int v) { return fam("Gstar", {{"n", v}}); })),
    };
  }
  {
    auto& t = b.add("Thm9", "Nikoghosyan, 2012 [60]", {tau_gt(E::frac(4, 3)), delta_ge((n - 5) / 2)},
                    hamiltonian_conclusion());
    t.sharpness = {
        replaced(fixed("Petersen graph", Role::kPremiseTight, "tau", fam("petersen")), tau_ge(E::frac(4, 3))),
        replaced(fixed("K_5 and K_{5,2} joined by a perfect matching on x_i y_i", Role::kPremiseTight, "delta",
                       fam("toughGadget")),
                 delta_ge((n - 6) / 2)),
    };
  }
  {
    auto& t = b.add("Thm10", "Nikoghosyan, 1981 [54]", {kappa_ge(2), delta_ge((n + kappa) / 3)},
                    hamiltonian_conclusion());
    t.aliases = {"f3"};
    t.sharpness = {
        example("2K_delta + K_1", Role::kPremiseTight, "kappa", "delta", 2, 5,
                when([](int v) { return v >= 2; }, [](int v) { return fam("join2Kd-K1", {{"delta", v}}); })),
        example("H(1, delta-kappa+1, delta, kappa), kappa in {2, delta}", Role::kPremiseTight, "delta", "delta", 2,
                5, [](int d) {
                  Instances out;
                  if (d < 2) return out;
                  out.push_back({hgraph(1, d - 1, d, 2), std::nullopt});
                  if (d > 2) out.push_back({hgraph(1, 1, d, d), std::nullopt});
                  return out;
                }),
    };
  }
  {
    auto& t = b.add("Thm11", "Bauer and Schmeichel, 1991 [5]", {tau_ge(1), delta_ge((n + kappa - 2) / 3)},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("K_{delta,delta+1}", Role::kPremiseTight, "tau", "delta", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
        example("L_delta", Role::kPremiseTight, "delta", "delta", 2, 5,
                when([](int v) { return v >= 2; }, ldelta)),
    };
  }
  {
    auto& t = b.add("Thm12", "Nash-Williams, 1971 [52]", {kappa_ge(2), delta_ge(max((n + 2) / 3, alpha))},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("(lambda+1)K_{delta-lambda+1} + K_lambda, lambda = 1", Role::kPremiseTight, "kappa", "delta", 3, 6,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(2, v, 1); })),
        example("(lambda+2)K_{delta-lambda} + K_{lambda+1}, lambda = 1", Role::kPremiseTight, "delta", "delta", 3, 6,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(3, v - 1, 2); })),
        fixed("H(lambda, lambda+1, lambda+3, lambda+2), lambda = 1", Role::kPremiseTight, "delta",
              hgraph(1, 2, 4, 3)),
    };
  }
  {
    auto& t = b.add("Thm13", "Bigalke and Jung, 1979 [9]", {tau_ge(1), delta_ge(max(n / 3, alpha - 1))},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("K_{delta,delta+1}", Role::kPremiseTight, "tau", "delta", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
        example("L_delta (n >= 7)", Role::kPremiseTight, "delta", "delta", 2, 5,
                when([](int v) { return v >= 2; }, ldelta)),
    };
  }
  {
    auto& t = b.add("Thm14", "Fraisse, 1986 [34]",
                    {kappa_ge(lambda + 1), delta_ge(max((n + 2) / (lambda + 2) + lambda - 1, alpha + lambda - 1))},
                    hamiltonian_conclusion());
    t.lambda = LambdaDomain{1, n};
    t.sharpness = {
        note(example("(lambda+1)K_{delta-lambda+1} + K_lambda, delta in {2lambda+1, 2lambda+2}", Role::kPremiseTight,
                     "kappa", "lambda", 1, 3,
                     [](int l) {
                       Instances out;
                       if (l < 1) return out;
                       for (int d : {2 * l + 1, 2 * l + 2}) out.push_back({cliques(l + 1, d - l + 1, l), l});
                       return out;
                     }),
             "at delta = 2lambda the degree premise fails as well"),
        example("(lambda+2)K_{delta-lambda} + K_{lambda+1}, delta in {2lambda+1, 2lambda+2}", Role::kPremiseTight,
                "delta", "lambda", 1, 3,
                [](int l) {
                  Instances out;
                  if (l < 1) return out;
                  for (int d : {2 * l + 1, 2 * l + 2}) out.push_back({cliques(l + 2, d - l, l + 1), l});
                  return out;
                }),
        example("H(lambda, lambda+1, lambda+3, lambda+2)", Role::kPremiseTight, "delta", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return hgraph(l, l + 1, l + 3, l + 2); }, same)),
    };
  }
  {
    auto& t = b.add("Thm15", "Yamashita, 2008 [69]", {kappa_ge(3), delta_ge(max((n + kappa + 3) / 4, alpha))},
                    hamiltonian_conclusion());
    t.sharpness = {
        example("3K_{delta-1} + K_2", Role::kPremiseTight, "kappa", "delta", 4, 6,
                when([](int v) { return v >= 4; }, [](int v) { return cliques(3, v - 1, 2); })),
        note(example("H(2, n-3delta+3, delta-1, kappa), kappa in {3, delta-1}", Role::kPremiseTight, "delta", "delta",
                     4, 6,
                     [](int d) {
                       Instances out;
                       if (d < 4) return out;
                       for (int k : {3, d - 1}) {
                         if (k == 3 && d - 1 == 3 && !out.empty()) continue;
                         out.push_back({hgraph(2, d - k + 1, d - 1, k), std::nullopt});
                       }
                       return out;
                     }),
             "the free order is fixed by n - 3delta + 3 = delta - kappa + 1"),
        example("H(1, 2, kappa+1, kappa)", Role::kPremiseTight, "delta", "kappa", 3, 5,
                when([](int k) { return k >= 3; }, [](int k) { return hgraph(1, 2, k + 1, k); })),
    };
  }
  {
    auto& t = b.add("Thm16", "Chvatal and Erdos, 1972 [18]", {relation("kappa", kappa, R::kGe, alpha)},
                    hamiltonian_conclusion());
    t.sharpness = {example("K_{delta,delta+1}", Role::kPremiseTight, "kappa", "delta", 1, 5,
                           when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); }))};
  }
  {
    auto& t = b.add("Thm17", "Woodall, 1973 [66]", {relation("binding", sym::b, R::kGe, E::frac(3, 2))},
                    hamiltonian_conclusion());
    auto e = example("aK_2 + Kbar_{a-1}", Role::kPremiseTight, "binding", "a", 2, 5,
                     when([](int a) { return a >= 2; }, [](int a) { return cliques_empty(a, 2, a - 1); }));
    e.epsilon = ExactNumber(1, 2);
    t.sharpness = {e};
  }
  {
    auto& t = b.add("Thm18", "Fleischner, 1974 [33]", {kappa_ge(2)}, square_hamiltonian());
    auto k23 = fixed("K_{2,3} (the square cannot be replaced by G)", Role::kConclusionTight, "", kab(2, 3));
    k23.stronger = hamiltonian_conclusion();
    auto pet = fixed("Petersen graph (the square cannot be replaced by G)", Role::kConclusionTight, "",
                     fam("petersen"));
    pet.stronger = hamiltonian_conclusion();
    t.sharpness = {
        k23,
        pet,
        example("x with three nontrivial pendant branches", Role::kPremiseTight, "kappa", "length", 2, 4,
                when([](int v) { return v >= 2; }, [](int v) { return fam("subdividedClaw", {{"length", v}}); })),
    };
  }
  {
    auto& t = b.add("Thm19", "Tutte, 1956 [65]", {kappa_ge(4), in_class("planar", GraphClass::kPlanar)},
                    hamiltonian_conclusion());
    t.sharpness = {
        fixed("Tutte's graph", Role::kPremiseTight, "kappa", fam("tutte")),
        fixed("K_{4,5}", Role::kPremiseNecessary, "planar", kab(4, 5)),
    };
  }
  {
    auto& t = b.add("Thm20", "R. Thomas and X. Yu, 1994 [64]",
                    {kappa_ge(4), in_class("projective-planar", GraphClass::kProjectivePlanar)},
                    hamiltonian_conclusion());
    auto e = fixed("Petersen graph (embeds in the projective plane)", Role::kPremiseTight, "kappa", fam("petersen"));
    e.assume = {GraphClass::kProjectivePlanar};
    t.sharpness = {e};
  }
  {
    auto& t = b.add("Thm21", "Faudree and Gould, 1997 [31]", {kappa_ge(2), free_of("free", {path_pattern(3)})},
                    hamiltonian_conclusion());
    t.aliases = {"ThmC"};
    t.sharpness = {example("2K_delta", Role::kPremiseNecessary, "kappa", "delta", 2, 5,
                           when([](int v) { return v >= 2; }, [](int v) { return fam("tKa", {{"t", 2}, {"a", v}}); }))};
  }
  auto two_cliques = [](int lo, int hi) {
    return example("2K_delta + K_1", Role::kPremiseTight, "kappa", "delta", lo, hi,
                   when([lo](int v) { return v >= lo; }, [](int v) { return fam("join2Kd-K1", {{"delta", v}}); }));
  };
  {
    auto& t = b.add("Thm22", "Broersma and Veldman, 1997 [15]", {kappa_ge(2), claw_and(path_pattern(6))},
                    hamiltonian_conclusion());
    t.aliases = {"ThmA"};
    t.sharpness = {two_cliques(2, 5)};
  }
  {
    auto& t = b.add("Thm23", "Faudree, Gould, Ryjacek and Schiermeyer, 1997 [32]",
                    {kappa_ge(2), claw_and(net_pattern(0, 0, 3))}, hamiltonian_conclusion());
    t.n_floor = 10;
    t.sharpness = {two_cliques(5, 6)};
  }
  {
    auto& t = b.add("Thm24", "Bedrossian, 1997 [7]", {kappa_ge(2), claw_and(net_pattern(0, 1, 2))},
                    hamiltonian_conclusion());
    t.sharpness = {two_cliques(2, 5)};
  }
  {
    auto& t = b.add("Thm25", "Duffus, Jacobson and Gould, 1997 [24]", {kappa_ge(2), claw_and(net_pattern(1, 1, 1))},
                    hamiltonian_conclusion());
    t.sharpness = {two_cliques(2, 5)};
  }
  {
    auto& t = b.add("ThmB", "Faudree and Gould, 1997 [31]",
                    {kappa_ge(2), free_of("claw-free", {claw_pattern()}),
                     free_of_some("free", {path_pattern(4), path_pattern(5), path_pattern(6), net_pattern(0, 0, 0),
                                           net_pattern(0, 0, 1), net_pattern(0, 0, 2), net_pattern(0, 1, 1),
                                           net_pattern(0, 0, 3), net_pattern(0, 1, 2), net_pattern(1, 1, 1)})},
                    hamiltonian_conclusion());
    t.n_floor = 10;
    t.notes = "sufficiency direction only: 2-connected {K_{1,3}, S}-free graphs of order at least 10";
    t.sharpness = {two_cliques(5, 6)};
  }
  {
    auto& t = b.add("Thm26", "Keil, 1985 [46]", {tau_ge(1), in_class("interval", GraphClass::kInterval)},
                    hamiltonian_conclusion());
    auto star = example("star K_{1,m}", Role::kPremiseTight, "tau", "m", 2, 5,
                        when([](int m) { return m >= 2; }, [](int m) { return fam("star", {{"m", m}}); }));
    star.assume = {GraphClass::kInterval};
    t.sharpness = {star, fixed("Petersen graph", Role::kPremiseNecessary, "interval", fam("petersen"))};
  }
  {
    auto& t = b.add("Thm27", "Kratsch, Lehel and Muller, 1996 [48]",
                    {tau_ge(E::frac(3, 2)), in_class("split", GraphClass::kSplit)}, hamiltonian_conclusion());
    t.notes = "sharpness examples are cited constructions without explicit parameters";
  }
  {
    auto& t = b.add("Thm28", "Deogun, Kratsch and Steiner, 1997 [22]",
                    {tau_ge(1), in_class("cocomparability", GraphClass::kCocomparability)}, hamiltonian_conclusion());
    auto e = example("empty graph (complement of a complete graph)", Role::kPremiseTight, "tau", "n", 3, 6,
                     when([](int v) { return v >= 3; }, [](int v) { return fam("empty", {{"n", v}}); }));
    e.assume = {GraphClass::kCocomparability};
    t.sharpness = {e};
  }
  {
    auto& t = b.add("Thm29", "Bohme, Harant and Tkac, 1999 [10]",
                    {in_class("chordal", GraphClass::kChordal), in_class("planar", GraphClass::kPlanar), tau_gt(1)},
                    hamiltonian_conclusion());
    t.notes = "sharpness examples are cited constructions without explicit parameters";
  }
  {
    auto& t = b.add("Thm30", "Kaiser, Kral and Stacho, 2007 [43]",
                    {tau_ge(E::frac(3, 2)), in_class("spider", GraphClass::kSpider)}, hamiltonian_conclusion());
    t.notes = "sharpness examples are cited constructions without explicit parameters";
  }
  {
    auto& t = b.add("Ore", "Ore, 1960 [63]", {relation("sigma", sigma(2), R::kGe, n)}, hamiltonian_conclusion());
    t.aliases = {"h1"};
  }
  {
    auto& t = b.add("Fan", "Fan, 1984 [28]", {kappa_ge(2), relation("delta2", delta_t(2), R::kGe, n / 2)},
                    hamiltonian_conclusion());
    t.aliases = {"h2"};
    t.notes = "stated for 2-connected graphs";
  }
}

// Dominating and CD cycle entries.
void dominating(Builder& b) {
  {
    auto& t = b.add("Thm31", "Nikoghosyan, 2011 [59]",
                    {kappa_ge(2), relation("q", q, R::kLe, if_ge(delta, 3, (3 * (delta - 1) * (delta + 2) - 1) / 2, 8))},
                    every_longest_dominating());
    auto k2 = fixed("K_2 + 3K_1", Role::kConclusionTight, "", cliques(3, 1, 2));
    k2.stronger = hamiltonian_conclusion();
    auto kd = example("K_delta + (delta+1)K_1", Role::kConclusionTight, "", "delta", 3, 4,
                      when([](int v) { return v >= 3; }, [](int v) { return cliques(v + 1, 1, v); }));
    kd.stronger = hamiltonian_conclusion();
    t.sharpness = {
        fixed("K_1 + 2K_2", Role::kPremiseTight, "kappa", cliques(2, 2, 1)),
        fixed("v_1..v_8 with 9 edges", Role::kPremiseTight, "q", fam("nineEdgeGadget")),
        k2,
        example("K_1 + 2K_delta", Role::kPremiseTight, "kappa", "delta", 3, 4,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(2, v, 1); })),
        example("K_2 + 3K_{delta-1}", Role::kPremiseTight, "q", "delta", 3, 4,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(3, v - 1, 2); })),
        kd,
    };
  }
  {
    auto& t = b.add("Thm32", "Nash-Williams, 1971 [52]", {kappa_ge(2), delta_ge((n + 2) / 3)},
                    every_longest_dominating());
    auto h = fixed("H(1,2,4,3)", Role::kConclusionTight, "", hgraph(1, 2, 4, 3));
    h.stronger = hamiltonian_conclusion();
    t.sharpness = {
        fixed("2K_3 + K_1", Role::kPremiseTight, "kappa", cliques(2, 3, 1)),
        note(replaced(example("3K_{delta-1} + K_2", Role::kPremiseTight, "delta", "delta", 3, 6,
                              when([](int v) { return v >= 3; }, [](int v) { return cliques(3, v - 1, 2); })),
                      delta_ge((n + 1) / 3)),
             "replacement read as delta >= (n+1)/3"),
        h,
    };
  }
  {
    auto& t = b.add("Thm33", "Bigalke and Jung, 1979 [9]", {tau_ge(1), delta_ge(n / 3)}, every_longest_dominating());
    auto gs = example("G*_n", Role::kConclusionTight, "", "n", 15, 15,
                      when([](int v) { return v >= 15 && v % 2 == 1; }, [](int v) { return fam("Gstar", {{"n", v}}); }));
    gs.stronger = hamiltonian_conclusion();
    t.sharpness = {
        example("2(kappa+1)K_2 + kappa K_1", Role::kAny, "", "kappa", 1, 3,
                when([](int k) { return k >= 1; }, [](int k) { return cliques_empty(2 * (k + 1), 2, k); })),
        note(example("(kappa+1)K_2 + kappa K_1", Role::kPremiseTight, "tau", "kappa", 1, 4,
                     when([](int k) { return k >= 1; }, [](int k) { return cliques_empty(k + 1, 2, k); })),
             "reading of the printed family with kappa+1 copies of K_2"),
        fixed("L_3", Role::kPremiseTight, "delta", ldelta(3)),
        gs,
    };
  }
  {
    auto& t = b.add("Thm34", "Yamashita, 2008 [69]", {kappa_ge(3), delta_ge((n + kappa + 3) / 4)},
                    every_longest_dominating());
    t.sharpness = {
        example("3K_{delta-1} + K_2", Role::kPremiseTight, "kappa", "delta", 4, 6,
                when([](int v) { return v >= 4; }, [](int v) { return cliques(3, v - 1, 2); })),
        note(example("H(2, n-3delta+3, delta-1, kappa), kappa = 3", Role::kPremiseTight, "delta", "delta", 4, 6,
                     when([](int d) { return d >= 4; }, [](int d) { return hgraph(2, d - 2, d - 1, 3); })),
             "the free order is fixed by n - 3delta + 3 = delta - kappa + 1"),
        example("H(1, 2, kappa+1, kappa)", Role::kAny, "", "kappa", 3, 5,
                when([](int k) { return k >= 3; }, [](int k) { return hgraph(1, 2, k + 1, k); })),
    };
  }
  {
    auto& t = b.add("Thm35", "Jung, 1990 [41]", {kappa_ge(3), delta_ge((n + 6) / 4)}, every_longest_cd(3));
    t.sharpness = {
        fixed("lambda K_{lambda+1} + K_{lambda-1}, lambda = 3", Role::kPremiseTight, "kappa", cliques(3, 4, 2)),
        example("(lambda+1)K_{delta-lambda+1} + K_lambda, lambda = 3", Role::kPremiseTight, "delta", "delta", 5, 6,
                when([](int d) { return d >= 5; }, [](int d) { return cliques(4, d - 2, 3); })),
        fixed("H(lambda-1, lambda, lambda+2, lambda+1), lambda = 3", Role::kAny, "", hgraph(2, 3, 5, 4)),
    };
  }
  {
    auto& t = b.add("Thm36", "Nikoghosyan, 2009 [57]", {kappa_ge(lambda), delta_ge((n + 2) / (lambda + 1) + lambda - 2)},
                    every_longest_cd(min(lambda, delta - lambda + 1)));
    t.lambda = LambdaDomain{1, n};
    t.sharpness = {
        example("lambda K_{lambda+1} + K_{lambda-1}", Role::kPremiseTight, "kappa", "lambda", 2, 3,
                when([](int l) { return l >= 2; }, [](int l) { return cliques(l, l + 1, l - 1); }, same)),
        example("(lambda+1)K_{delta-lambda+1} + K_lambda, delta = 2lambda", Role::kPremiseTight, "delta", "lambda", 1,
                3, when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 1, l + 1, l); }, same)),
        example("H(lambda-1, lambda, lambda+2, lambda+1)", Role::kAny, "", "lambda", 2, 3,
                when([](int l) { return l >= 2; }, [](int l) { return hgraph(l - 1, l, l + 2, l + 1); }, same)),
    };
  }
  {
    auto& t = b.add("g1", "Nikoghosyan, 2009 [57]",
                    {relation("lambda", kappa, R::kGe, lambda), delta_ge((n + 2) / (lambda + 1) + lambda - 2)},
                    exists_cd(min(lambda, delta - lambda + 1)));
    t.lambda = LambdaDomain{1, n};
  }
  {
    auto& t = b.add("g3", "Nash-Williams, 1971 [52]", {kappa_ge(2), delta_ge((n + 2) / 3)}, exists_dominating());
    t.aliases = {"f1"};
  }
  b.add("g4", "Jung, 1990 [41]", {kappa_ge(3), delta_ge((n + 6) / 4)}, exists_cd(3));
  b.add("f2", "Bigalke and Jung, 1979 [9]", {tau_ge(1), delta_ge(n / 3)}, exists_dominating());
}

// Circumference entries.
void long_cycles(Builder& b) {
  {
    auto& t = b.add("Thm37", "Dirac, 1952 [23]", {}, circumference_at_least(delta + 1));
    t.aliases = {"T1"};
    t.n_floor = 1;
    t.sharpness = {example("two copies of K_{delta+1} joined by an edge", Role::kConclusionTight, "", "delta", 1, 5,
                           when([](int v) { return v >= 1; },
                                [](int v) { return fam("bridgedCliques", {{"delta", v}}); }))};
  }
  {
    auto& t = b.add("Thm38", "Kouider, 1994 [47]", {relation("kappa", kappa, R::kGe, 1)},
                    circumference_at_least(n / ceil(alpha / kappa)));
    t.n_floor = 1;
    t.notes = "kappa >= 1 keeps the bound defined; degenerate cycles of length 1 and 2 count";
    t.sharpness = {example("K_{a,a} (kappa = alpha)", Role::kConclusionTight, "", "a", 1, 5,
                           when([](int a) { return a >= 1; }, [](int a) { return kab(a, a); }))};
  }
  auto extremal = [](std::string label, int kappa_lo, int kappa_hi, std::function<std::vector<int>(int)> deltas) {
    return example(std::move(label), Role::kConclusionTight, "", "kappa", kappa_lo, kappa_hi, [deltas](int k) {
      Instances out;
      if (k < 1) return out;
      for (int d : deltas(k)) out.push_back({cliques(k + 1, d - k + 1, k), std::nullopt});
      return out;
    });
  };
  auto next_three = [](int k) { return std::vector<int>{k + 1, k + 2, k + 3}; };
  {
    auto& t = b.add("Thm39", "Nikoghosyan, 1998 [61]", {}, residual_bound((pbar + 2) * (delta - pbar)));
    t.aliases = {"T11"};
    t.sharpness = {fixed("2K_3 + K_1", Role::kConclusionTight, "", cliques(2, 3, 1)),
                   extremal("(kappa+1)K_{delta-kappa+1} + K_kappa, delta in kappa+1..kappa+3", 2, 3, next_three)};
  }
  {
    auto& t = b.add("Thm40", "Nikoghosyan, 2000 [61]", {}, residual_bound((cbar + 1) * (delta - cbar + 1)));
    t.aliases = {"T12"};
    t.sharpness = {fixed("2K_3 + K_1", Role::kConclusionTight, "", cliques(2, 3, 1)),
                   extremal("(kappa+1)K_{delta-kappa+1} + K_kappa, delta in kappa+1..kappa+3", 2, 3, next_three)};
  }
  {
    auto& t = b.add("Thm41", "Nikoghosyan, 2000 [56]", {kappa_ge(2)},
                    residual_bound(if_ge(cbar, kappa, (cbar + 1) * kappa / (cbar + kappa + 1) * (delta + 2),
                                         (cbar + 1) * cbar / (2 * cbar + 1) * (delta + 2))));
    t.aliases = {"T14"};
    t.sharpness = {note(extremal("(kappa+1)K_{delta-kappa+1} + K_kappa, delta in {2kappa-1, 2kappa}", 2, 3,
                                 [](int k) { return std::vector<int>{2 * k - 1, 2 * k}; }),
                        "equality holds on the cbar >= kappa branch")};
  }
  {
    const E tt = floor((n - 1) / (lambda - 1));
    const E r = n - 1 - tt * (lambda - 1);
    auto& t = b.add("Thm42", "Woodall, 1976 [67]", {q_gt(tt * binom(lambda, 2) + binom(r + 1, 2))},
                    circumference_above(lambda));
    t.lambda = LambdaDomain{2, n};
    t.notes = "t = floor((n-1)/(lambda-1)) and r = n-1-t(lambda-1) are determined by n and lambda";
    t.sharpness = {example("t copies of K_lambda and one K_{r+1} sharing a vertex, t in {1,2}, r in {0, lambda-2}",
                           Role::kPremiseTight, "q", "lambda", 2, 5, [](int l) {
                             Instances out;
                             if (l < 2) return out;
                             for (int t : {1, 2}) {
                               for (int r : {0, l - 2}) {
                                 if (r == 0 && l == 2 && t == 1) continue;
                                 if (r == l - 2 && r == 0 && !out.empty() && out.back().spec.params.at("t") == t)
                                   continue;
                                 out.push_back({fam("windmill", {{"lambda", l}, {"t", t}, {"r", r}}), l});
                               }
                             }
                             return out;
                           })};
  }
  {
    auto f = [](const E& tt) { return (lambda + 1 - tt) * (lambda - tt) / 2 + tt * (n - lambda - 1 + tt); };
    auto& t = b.add("Thm43", "Fan, Lv and Wang, 2004 [30]", {kappa_ge(2), q_gt(max(f(2), f(floor(lambda / 2))))},
                    circumference_above(lambda));
    t.lambda = LambdaDomain{4, n - 1};
    t.notes = "the side condition 2 <= t <= lambda/2 needs lambda >= 4";
    t.sharpness = {example("K_{lambda+1-t} plus isolated vertices joined to the same t vertices, t maximising f",
                           Role::kPremiseTight, "q", "lambda", 4, 7, [](int l) {
                             Instances out;
                             if (l < 4) return out;
                             const int order = l + 3;
                             auto fv = [&](int t) { return (l + 1 - t) * (l - t) / 2 + t * (order - l - 1 + t); };
                             const int best = std::max(fv(2), fv(l / 2));
                             for (int t : {2, l / 2}) {
                               if (fv(t) != best || (t == l / 2 && t == 2 && !out.empty())) continue;
                               out.push_back({fam("sharedClique", {{"n", order}, {"lambda", l}, {"t", t}}), l});
                             }
                             return out;
                           })};
  }
  {
    auto& t = b.add("Thm44", "Alon, 1986 [1]", {delta_ge(n / (lambda + 1))}, circumference_at_least(n / lambda));
    t.lambda = LambdaDomain{1, n};
    t.sharpness = {
        example("(lambda+1)K_lambda + K_1", Role::kPremiseTight, "delta", "lambda", 1, 4,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 1, l, 1); }, same)),
        example("lambda K_{lambda+1}", Role::kConclusionTight, "", "lambda", 2, 4,
                when([](int l) { return l >= 2; }, [](int l) { return fam("tKa", {{"t", l}, {"a", l + 1}}); },
                     same)),
    };
  }
  auto lambda_families = [](int lo, int hi) {
    return std::vector<SharpnessExample>{
        example("(lambda+1)K_{lambda+1} + K_lambda", Role::kAny, "", "lambda", std::max(lo, 1), hi,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 1, l + 1, l); })),
        example("(lambda+3)K_{lambda-1} + K_{lambda+2}", Role::kAny, "", "lambda", std::max(lo, 2), hi,
                when([](int l) { return l >= 2; }, [](int l) { return cliques(l + 3, l - 1, l + 2); })),
        example("(lambda+2)K_lambda + K_{lambda+1}", Role::kAny, "", "lambda", std::max(lo, 1), hi,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 2, l, l + 1); })),
    };
  };
  {
    auto& t = b.add("Thm45", "Dirac, 1952 [23]", {kappa_ge(2)}, circumference_at_least(min_n(2 * delta)));
    t.aliases = {"T2"};
    t.sharpness = lambda_families(1, 3);
  }
  {
    auto& t = b.add("Thm46", "Kaneko and Yoshimoto [44]", {balanced(), kappa_ge(2)},
                    circumference_at_least(min_n(4 * delta - 2)));
    t.notes = "citation year printed as 1952; the citation key is authoritative";
    auto mm = example("X = P u Q, Y = R u S, N(P) = R, N(Q) = Y, quarter blocks", Role::kConclusionTight, "", "n/4",
                      2, 4,
                      when([](int m) { return m >= 2; },
                           [](int m) { return fam("moonMoser", {{"n", 4 * m}, {"delta", m}}); }));
    mm.stronger = circumference_at_least(min_n(4 * delta - 1));
    t.sharpness = {
        example("quarter blocks with N(Q - z) = S and N(z) = Y", Role::kPremiseTight, "kappa", "n/4", 2, 4,
                when([](int m) { return m >= 2; }, [](int m) { return fam("moonMoserZ", {{"n", 4 * m}}); })),
        mm,
        example("K_{delta,delta+1} (balance cannot be removed)", Role::kPremiseNecessary, "balanced", "delta", 2, 5,
                when([](int v) { return v >= 2; }, [](int v) { return kab(v, v + 1); })),
    };
  }
  {
    auto& t = b.add("Thm47", "Bauer and Schmeichel, 1987 [4]", {tau_ge(1)}, circumference_at_least(min_n(2 * delta + 2)));
    t.aliases = {"T9"};
    t.sharpness = {
        example("K_{delta,delta+1}", Role::kPremiseTight, "tau", "delta", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
        fixed("L_2", Role::kConclusionTight, "", ldelta(2)),
    };
  }
  {
    auto& t = b.add("Thm48", "Nikoghosyan, 2012 [60]", {tau_gt(E::frac(4, 3))},
                    circumference_at_least(min_n(2 * delta + 5)));
    auto alt = fixed("K_{5,2} and K_5 joined by a matching on x_i z_i", Role::kConclusionTight, "",
                     fam("toughGadgetAlt"));
    alt.stronger = circumference_at_least(min_n(2 * delta + 6));
    t.sharpness = {replaced(fixed("Petersen graph", Role::kPremiseTight, "tau", fam("petersen")),
                            tau_ge(E::frac(4, 3))),
                   alt};
  }
  {
    auto& t = b.add("Thm49", "Nikoghosyan, 1981 [54]", {kappa_ge(3)}, circumference_at_least(min_n(3 * delta - kappa)));
    t.aliases = {"T5"};
    t.sharpness = {
        example("3K_{delta-1} + K_2", Role::kPremiseTight, "kappa", "delta", 3, 6,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(3, v - 1, 2); })),
        example("H(1, delta-kappa+1, delta, kappa), kappa = 3", Role::kConclusionTight, "", "delta", 3, 5,
                when([](int d) { return d >= 3; }, [](int d) { return hgraph(1, d - 2, d, 3); })),
    };
  }
  {
    auto& t = b.add("Thm50", "Jung, 1978 [39]", {kappa_ge(3), delta_ge(alpha)},
                    circumference_at_least(min_n(3 * delta - 3)));
    t.aliases = {"T4"};
    t.sharpness = {
        fixed("(lambda+2)K_{lambda+2} + K_{lambda+1}, lambda = 1", Role::kPremiseTight, "kappa", cliques(3, 3, 2)),
        fixed("(lambda+4)K_lambda + K_{lambda+3}, lambda = 1", Role::kPremiseTight, "delta", cliques(5, 1, 4)),
        fixed("(lambda+3)K_{lambda+1} + K_{lambda+2}, lambda = 1", Role::kConclusionTight, "", cliques(4, 2, 3)),
    };
  }
  {
    auto& t = b.add("Thm51", "Nikoghosyan, 2009 [57]", {kappa_ge(lambda + 2), delta_ge(alpha + lambda - 1)},
                    circumference_at_least(min_n((lambda + 2) * (delta - lambda))));
    t.aliases = {"T17"};
    t.lambda = LambdaDomain{1, n};
    t.sharpness = {
        example("(lambda+2)K_{lambda+2} + K_{lambda+1}", Role::kPremiseTight, "kappa", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 2, l + 2, l + 1); }, same)),
        example("(lambda+4)K_lambda + K_{lambda+3}", Role::kPremiseTight, "delta", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 4, l, l + 3); }, same)),
        example("(lambda+3)K_{lambda+1} + K_{lambda+2}", Role::kConclusionTight, "", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 3, l + 1, l + 2); }, same)),
    };
  }
  {
    auto& t = b.add("Thm52", "M.Zh. Nikoghosyan and Zh.G. Nikoghosyan, 2011 [53]", {kappa_ge(4), delta_ge(alpha)},
                    circumference_at_least(min_n(4 * delta - kappa - 4)));
    t.aliases = {"T18"};
    t.sharpness = {
        note(example("4K_{delta-2} + K_3", Role::kPremiseTight, "kappa", "delta", 5, 7,
                     when([](int v) { return v >= 4; }, [](int v) { return cliques(4, v - 2, 3); })),
             "at delta = 4 the bound equals c, so the family starts at 5"),
        example("H(1, 2, kappa+1, kappa)", Role::kPremiseTight, "delta", "kappa", 4, 5,
                when([](int k) { return k >= 4; }, [](int k) { return hgraph(1, 2, k + 1, k); })),
        example("H(2, n-3delta+3, delta-1, kappa), kappa = 4", Role::kAny, "", "delta", 5, 6,
                when([](int d) { return d >= 5; }, [](int d) { return hgraph(2, d - 3, d - 1, 4); })),
    };
  }
  {
    auto& t = b.add("Thm53", "Bauer, Morgana, Schmeichel and Veldman, 1989 [3]", {kappa_ge(2), delta_ge((n + 2) / 3)},
                    circumference_at_least(min_n(n + delta - alpha)));
    t.sharpness = {
        example("2K_delta + K_1", Role::kPremiseTight, "kappa", "delta", 3, 5,
                when([](int v) { return v >= 3; }, [](int v) { return fam("join2Kd-K1", {{"delta", v}}); })),
        example("3K_{delta-1} + K_2", Role::kPremiseTight, "delta", "delta", 3, 5,
                when([](int v) { return v >= 3; }, [](int v) { return cliques(3, v - 1, 2); })),
        example("K_{2delta-2,delta}", Role::kConclusionTight, "", "delta", 2, 5,
                when([](int v) { return v >= 2; }, [](int v) { return kab(2 * v - 2, v); })),
    };
  }
  {
    auto& t = b.add("Thm54", "Bauer, Schmeichel and Veldman, 1988 [6]", {tau_ge(1), delta_ge(n / 3)},
                    circumference_at_least(min_n(n + delta - alpha + 1)));
    t.sharpness = {
        example("K_{delta,delta+1}", Role::kPremiseTight, "tau", "delta", 1, 5,
                when([](int v) { return v >= 1; }, [](int v) { return kab(v, v + 1); })),
        example("L_delta", Role::kPremiseTight, "delta", "delta", 2, 5, when([](int v) { return v >= 2; }, ldelta)),
        example("G*_n", Role::kAny, "", "n", 15, 17,
                when([](int v) { return v >= 15 && v % 2 == 1; }, [](int v) { return fam("Gstar", {{"n", v}}); })),
    };
  }
  {
    auto& t = b.add("T3", "Bondy, 1971 [12]", {kappa_ge(2)}, circumference_at_least(min_n(sigma(2))));
    (void)t;
  }
  b.add("T6", "Fan, 1984 [28]", {kappa_ge(2)}, circumference_at_least(min_n(2 * delta_t(2))));
  {
    auto& t = b.add("T7", "[29], 1985", {kappa_ge(3), in_class("regular", GraphClass::kRegular)},
                    circumference_at_least(min_n(3 * delta)));
    t.notes = "included as printed; excluded from the soundness alarm";
  }
  b.add("T8", "Nikoghosyan, 1985 [55]", {kappa_ge(4), delta_ge(alpha)},
        circumference_at_least(min_n(4 * delta - 2 * kappa)));
  b.add("T10", "Bauer and Schmeichel, 1986 [4]", {tau_ge(1)}, circumference_at_least(min_n(sigma(2) + 2)));
  b.add("T13", "[42], 1999", {kappa_ge(2)}, circumference_at_least(min_n((tau + 1) * (delta + 1) - 1)));
  b.add("T15", "[68], 2007", {kappa_ge(3)}, circumference_at_least(min_n(sigma(3) - kappa)));
  {
    auto& t = b.add("T16", "[50], 2009", {kappa_ge(3), free_of("claw-free", {claw_pattern()})},
                    circumference_at_least(min_n(6 * delta - 15)));
    t.notes = "printed as c >= min{6delta-15}; read as min{n, 6delta-15}";
  }
  b.add("T19", "Nikoghosyan, 2012 [60]", {tau_gt(1)},
        either({circumference_at_least(min_n(2 * delta + 5)), isomorphic_to("Petersen", petersen_graph())}));
}

// Disjunctive entries.
void mixed(Builder& b) {
  {
    auto& t = b.add("Thm55", "Jung, 1981 [40]", {kappa_ge(3)},
                    either({every_longest_dominating(), circumference_at_least(3 * delta - 3)}));
    t.sharpness = {
        fixed("(lambda+1)K_{lambda+1} + K_lambda, lambda = 2", Role::kAny, "", cliques(3, 3, 2)),
        fixed("(lambda+3)K_{lambda-1} + K_{lambda+2}, lambda = 2", Role::kAny, "", cliques(5, 1, 4)),
        fixed("(lambda+2)K_lambda + K_{lambda+1}, lambda = 2", Role::kAny, "", cliques(4, 2, 3)),
    };
  }
  {
    auto& t = b.add("Thm56", "M.Zh. Nikoghosyan and Zh.G. Nikoghosyan, 2011 [53]", {kappa_ge(4)},
                    either({every_longest_dominating(), circumference_at_least(4 * delta - kappa - 4)}));
    t.sharpness = {
        note(example("4K_{delta-2} + K_3", Role::kAny, "", "delta", 5, 6,
                     when([](int v) { return v >= 4; }, [](int v) { return cliques(4, v - 2, 3); })),
             "at delta = 4 the bound equals c, so the family starts at 5"),
        example("H(2, delta-kappa+1, delta-1, kappa), kappa = 4", Role::kAny, "", "delta", 5, 6,
                when([](int d) { return d >= 5; }, [](int d) { return hgraph(2, d - 3, d - 1, 4); })),
        example("H(1, 2, kappa+1, kappa)", Role::kAny, "", "kappa", 4, 5,
                when([](int k) { return k >= 4; }, [](int k) { return hgraph(1, 2, k + 1, k); })),
    };
  }
  {
    auto& t = b.add("Thm57", "Nikoghosyan, 2009 [57]", {kappa_ge(lambda + 1)},
                    either({every_longest_cd(min(lambda, delta - lambda)),
                            circumference_at_least((lambda + 1) * (delta - lambda + 1))}));
    t.lambda = LambdaDomain{1, n};
    t.sharpness = {
        example("(lambda+1)K_{lambda+1} + K_lambda", Role::kAny, "", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 1, l + 1, l); }, same)),
        example("(lambda+3)K_{lambda-1} + K_{lambda+2}", Role::kAny, "", "lambda", 2, 3,
                when([](int l) { return l >= 2; }, [](int l) { return cliques(l + 3, l - 1, l + 2); }, same)),
        example("(lambda+2)K_lambda + K_{lambda+1}", Role::kAny, "", "lambda", 1, 3,
                when([](int l) { return l >= 1; }, [](int l) { return cliques(l + 2, l, l + 1); }, same)),
    };
  }
}

std::vector<TheoremSpec> build_catalog() {
  Builder b;
  hamilton(b);
  dominating(b);
  long_cycles(b);
  mixed(b);
  return std::move(b.list);
}

}  // namespace

const std::vector<TheoremSpec>& catalog() {
  static const std::vector<TheoremSpec> list = build_catalog();
  return list;
}

const std::set<std::string>& quarantine() {
  static const std::set<std::string> ids = {"T7"};
  return ids;
}

const TheoremSpec* find_theorem(const std::string& id) {
  for (const auto& t : catalog()) {
    if (t.id == id) return &t;
    if (std::find(t.aliases.begin(), t.aliases.end(), id) != t.aliases.end()) return &t;
  }
  return nullptr;
}

}  // namespace cyclekit
