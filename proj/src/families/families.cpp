#include "cyclekit/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cyclekit/graph_io.hpp"
#include "cyclekit/named_graphs.hpp"

namespace cyclekit {

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << name;
  if (!params.empty()) {
    os << '(';
    bool first = true;
    for (const auto& [k, v] : params) {
      os << (first ? "" : ",") << k << '=' << v;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  const auto open = text.find('(');
  spec.name = text.substr(0, open);
  if (open == std::string::npos) return spec;
  if (text.back() != ')') throw FamilyError("family spec: missing ')' in " + text);
  std::stringstream body(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw FamilyError("family spec: expected key=value, got '" + item + "'");
    try {
      spec.params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw FamilyError("family spec: bad integer in '" + item + "'");
    }
  }
  return spec;
}

namespace {

class Params {
 public:
  explicit Params(const FamilySpec& spec) : spec_(spec) {}

  int get(const std::string& key) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw FamilyError(spec_.name + ": missing parameter '" + key + "'");
    return it->second;
  }
  int get_or(const std::string& key, int fallback) const {
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }
  void require(bool ok, const std::string& what) const {
    if (!ok) throw FamilyError(spec_.to_string() + ": " + what);
  }

 private:
  const FamilySpec& spec_;
};

void check_order(const Params& p, long long n) { p.require(n >= 0 && n <= kMaxOrder, "order exceeds 64"); }

Graph cliques_join(int t, int a, const Graph& right) { return join(copies(t, complete_graph(a)), right); }

Graph h_graph(const Params& p) {
  const int a = p.get("a"), b = p.get("b"), t = p.get("t"), k = p.get("k");
  p.require(a >= 1 && b >= 1 && t >= 1, "needs a, b, t >= 1");
  p.require(0 <= k && k <= t, "needs 0 <= k <= t");
  check_order(p, static_cast<long long>(t) * a + t + b);
  const Graph base = cliques_join(t, a, empty_graph(t));
  const int first_indep = t * a;
  const Graph g = disjoint_union(base, complete_graph(b));
  GraphBuilder builder(g.order());
  for (auto [u, v] : g.edges()) builder.add_edge(u, v);
  const int kb = t * a + t;
  builder.add_complete_bipartite(VertexSet::range(first_indep + k) - VertexSet::range(first_indep),
                                 VertexSet::range(kb + b) - VertexSet::range(kb));
  return std::move(builder).build();
}

Graph l_graph(const Params& p) {
  const int d = p.get("delta");
  p.require(d >= 1, "needs delta >= 1");
  check_order(p, 3LL * d + 1);
  const Graph g = cliques_join(3, d, complete_graph(1));
  GraphBuilder builder(g.order());
  for (auto [u, v] : g.edges()) builder.add_edge(u, v);
  builder.add_clique(VertexSet::of({0, d, 2 * d}));
  return std::move(builder).build();
}

// Blocks in order: independent A, middle B, clique C.
Graph gn_graph(int n, int d, bool middle_is_clique) {
  const int a = (n - 1) / 2;
  const int c = (n + 1) / 2 - d;
  GraphBuilder builder(n);
  const VertexSet all = VertexSet::range(n);
  const VertexSet bset = VertexSet::range(a + d) - VertexSet::range(a);
  const VertexSet cset = all - VertexSet::range(a + d);
  if (middle_is_clique) builder.add_clique(bset);
  builder.add_complete_bipartite(bset, all - bset);
  builder.add_clique(cset);
  for (int i = 0; i < c; ++i) builder.add_edge(a + d + i, i);
  return std::move(builder).build();
}

Graph gn(const Params& p) {
  const int n = p.get("n"), d = p.get("delta");
  p.require(n >= 15 && n % 2 == 1, "needs odd n >= 15");
  p.require(3 * d >= n && 2 * d <= n - 5, "needs n/3 <= delta <= (n-5)/2");
  check_order(p, n);
  return gn_graph(n, d, true);
}

Graph gstar(const Params& p) {
  const int n = p.get("n");
  p.require(n >= 15 && n % 2 == 1, "needs odd n >= 15");
  check_order(p, n);
  return gn_graph(n, (n - 5) / 2, false);
}

Graph clique_pendant(const Params& p) {
  const int n = p.get("n");
  p.require(n >= 2, "needs n >= 2");
  check_order(p, n);
  GraphBuilder b(n);
  b.add_clique(VertexSet::range(n - 1));
  b.add_edge(0, n - 1);
  return std::move(b).build();
}

Graph erdos_extremal(const Params& p) {
  const int n = p.get("n"), d = p.get("delta");
  p.require(d >= 1 && 2 * d <= n, "needs 1 <= delta <= n/2");
  check_order(p, n);
  GraphBuilder b(n);
  b.add_clique(VertexSet::range(n - d));
  b.add_complete_bipartite(VertexSet::range(d), VertexSet::range(n) - VertexSet::range(n - d));
  return std::move(b).build();
}

Graph ktt_minus_star(const Params& p) {
  const int t = p.get("t");
  p.require(t >= 1, "needs t >= 1");
  check_order(p, 2LL * t);
  GraphBuilder b(2 * t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (i == 0 && j >= 1) continue;
      b.add_edge(i, t + j);
    }
  }
  return std::move(b).build();
}

// X = P u Q on 0..n/2-1, Y = R u S on n/2..n-1, |P| = |R| = d.
Graph moon_moser(const Params& p) {
  const int n = p.get("n"), d = p.get("delta");
  p.require(n >= 2 && n % 2 == 0, "needs even n >= 2");
  p.require(d >= 1 && 2 * d <= n, "needs 1 <= delta <= n/2");
  check_order(p, n);
  const int h = n / 2;
  const VertexSet x = VertexSet::range(h);
  const VertexSet y = VertexSet::range(n) - x;
  const VertexSet pset = VertexSet::range(d);
  const VertexSet rset = VertexSet::range(h + d) - x;
  GraphBuilder b(n);
  b.add_complete_bipartite(pset, rset);
  b.add_complete_bipartite(x - pset, y);
  return std::move(b).build();
}

// Quarter blocks P, Q, R, S; z is the first vertex of Q.
Graph moon_moser_z(const Params& p) {
  const int n = p.get("n");
  p.require(n >= 4 && n % 4 == 0, "needs n divisible by 4");
  check_order(p, n);
  const int m = n / 4;
  auto block = [&](int i) { return VertexSet::range((i + 1) * m) - VertexSet::range(i * m); };
  const VertexSet pset = block(0), qset = block(1), rset = block(2), sset = block(3);
  const int z = m;
  GraphBuilder b(n);
  b.add_complete_bipartite(pset, rset);
  b.add_complete_bipartite(qset.without(z), sset);
  b.add_complete_bipartite(VertexSet::single(z), rset | sset);
  return std::move(b).build();
}

// x = 0, w = 1, paths x y_i z_i w with y_i = 2 + i, z_i = 5 + i.
Graph theta_gadget() {
  GraphBuilder b(8);
  for (int i = 0; i < 3; ++i) {
    b.add_edge(0, 2 + i);
    b.add_edge(2 + i, 5 + i);
    b.add_edge(5 + i, 1);
  }
  return std::move(b).build();
}

// K_5 on x_1..x_5, K_{5,2} on y_1..y_5 | u_1, u_2, matching x_i y_i.
Graph tough_gadget() {
  GraphBuilder b(12);
  b.add_clique(VertexSet::range(5));
  b.add_complete_bipartite(VertexSet::range(10) - VertexSet::range(5), VertexSet::of({10, 11}));
  for (int i = 0; i < 5; ++i) b.add_edge(i, 5 + i);
  return std::move(b).build();
}

// K_{5,2} on x_1..x_5 | y_1, y_2, K_5 on z_1..z_5, matching x_i z_i.
Graph tough_gadget_alt() {
  GraphBuilder b(12);
  b.add_complete_bipartite(VertexSet::range(5), VertexSet::of({5, 6}));
  b.add_clique(VertexSet::range(12) - VertexSet::range(7));
  for (int i = 0; i < 5; ++i) b.add_edge(i, 7 + i);
  return std::move(b).build();
}

Graph nine_edge_gadget() {
  return Graph::from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 3}});
}

Graph bridged_cliques(const Params& p) {
  const int d = p.get("delta");
  p.require(d >= 1, "needs delta >= 1");
  check_order(p, 2LL * d + 2);
  const Graph g = disjoint_union(complete_graph(d + 1), complete_graph(d + 1));
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  b.add_edge(0, d + 1);
  return std::move(b).build();
}

// t copies of K_lambda and one K_{r+1} sharing vertex 0.
Graph windmill(const Params& p) {
  const int lambda = p.get("lambda"), t = p.get("t"), r = p.get("r");
  p.require(lambda >= 2 && t >= 0 && r >= 0 && r < lambda - 1, "needs lambda >= 2, t >= 0, 0 <= r < lambda - 1");
  const long long n = static_cast<long long>(t) * (lambda - 1) + r + 1;
  check_order(p, n);
  GraphBuilder b(static_cast<int>(n));
  int next = 1;
  for (int i = 0; i < t; ++i) {
    b.add_clique((VertexSet::range(next + lambda - 1) - VertexSet::range(next)).with(0));
    next += lambda - 1;
  }
  b.add_clique((VertexSet::range(next + r) - VertexSet::range(next)).with(0));
  return std::move(b).build();
}

// K_{lambda+1-t} plus n-(lambda+1-t) vertices joined to its first t vertices.
Graph shared_clique(const Params& p) {
  const int n = p.get("n"), lambda = p.get("lambda"), t = p.get("t");
  const int k = lambda + 1 - t;
  p.require(t >= 1 && k >= t && n >= k, "needs 1 <= t <= lambda + 1 - t <= n");
  check_order(p, n);
  GraphBuilder b(n);
  b.add_clique(VertexSet::range(k));
  b.add_complete_bipartite(VertexSet::range(t), VertexSet::range(n) - VertexSet::range(k));
  return std::move(b).build();
}

// Centre 0 with three pendant paths of `length` edges.
Graph subdivided_claw(const Params& p) {
  const int len = p.get_or("length", 2);
  p.require(len >= 1, "needs length >= 1");
  check_order(p, 1 + 3LL * len);
  GraphBuilder b(1 + 3 * len);
  for (int leg = 0; leg < 3; ++leg) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      const int v = 1 + leg * len + i;
      b.add_edge(prev, v);
      prev = v;
    }
  }
  return std::move(b).build();
}

// Standard 46-vertex planar cubic non-hamiltonian graph.
Graph tutte_graph() {
  static const Graph g = parse_graph6(
      "msOGGC@?H?c??@??_GG?A??C??G_?G_????@???G??__??A???@????g???GC??G????CC???G????G???AC??_????_??G?????_A???"
      "@???A?????G??_?????G??G??@A???G_??_???c??W???O???O??C_??B???_????aO??");
  return g;
}

using Builder = std::function<Graph(const Params&)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"complete",
       [](const Params& p) {
         const int n = p.get("n");
         p.require(n >= 0, "needs n >= 0");
         check_order(p, n);
         return complete_graph(n);
       }},
      {"empty",
       [](const Params& p) {
         const int n = p.get("n");
         p.require(n >= 0, "needs n >= 0");
         check_order(p, n);
         return empty_graph(n);
       }},
      {"completeBipartite",
       [](const Params& p) {
         const int a = p.get("a"), b = p.get("b");
         p.require(a >= 0 && b >= 0, "needs a, b >= 0");
         check_order(p, static_cast<long long>(a) + b);
         return complete_bipartite(a, b);
       }},
      {"path",
       [](const Params& p) {
         const int n = p.get("n");
         p.require(n >= 1, "needs n >= 1");
         check_order(p, n);
         return path_graph(n);
       }},
      {"cycle",
       [](const Params& p) {
         const int n = p.get("n");
         p.require(n >= 3, "needs n >= 3");
         check_order(p, n);
         return cycle_graph(n);
       }},
      {"star",
       [](const Params& p) {
         const int m = p.get("m");
         p.require(m >= 1, "needs m >= 1");
         check_order(p, m + 1LL);
         return star_graph(m);
       }},
      {"petersen", [](const Params&) { return petersen_graph(); }},
      {"tutte", [](const Params&) { return tutte_graph(); }},
      {"tKa",
       [](const Params& p) {
         const int t = p.get("t"), a = p.get("a");
         p.require(t >= 0 && a >= 1, "needs t >= 0, a >= 1");
         check_order(p, static_cast<long long>(t) * a);
         return copies(t, complete_graph(a));
       }},
      {"tKa_join_Kb",
       [](const Params& p) {
         const int t = p.get("t"), a = p.get("a"), b = p.get("b");
         p.require(t >= 0 && a >= 1 && b >= 0, "needs t >= 0, a >= 1, b >= 0");
         check_order(p, static_cast<long long>(t) * a + b);
         return cliques_join(t, a, complete_graph(b));
       }},
      {"tKa_join_empty",
       [](const Params& p) {
         const int t = p.get("t"), a = p.get("a"), b = p.get("b");
         p.require(t >= 0 && a >= 1 && b >= 0, "needs t >= 0, a >= 1, b >= 0");
         check_order(p, static_cast<long long>(t) * a + b);
         return cliques_join(t, a, empty_graph(b));
       }},
      {"join2Kd-K1",
       [](const Params& p) {
         const int d = p.get("delta");
         p.require(d >= 1, "needs delta >= 1");
         check_order(p, 2LL * d + 1);
         return cliques_join(2, d, complete_graph(1));
       }},
      {"H", h_graph},
      {"L", l_graph},
      {"Gn", gn},
      {"Gstar", gstar},
      {"cliquePendant", clique_pendant},
      {"erdosExtremal", erdos_extremal},
      {"kttMinusStar", ktt_minus_star},
      {"moonMoser", moon_moser},
      {"moonMoserZ", moon_moser_z},
      {"thetaGadget", [](const Params&) { return theta_gadget(); }},
      {"toughGadget", [](const Params&) { return tough_gadget(); }},
      {"toughGadgetAlt", [](const Params&) { return tough_gadget_alt(); }},
      {"nineEdgeGadget", [](const Params&) { return nine_edge_gadget(); }},
      {"bridgedCliques", bridged_cliques},
      {"windmill", windmill},
      {"sharedClique", shared_clique},
      {"subdividedClaw", subdivided_claw},
  };
  return table;
}

}  // namespace

Graph build(const FamilySpec& spec) {
  const auto& table = builders();
  auto it = table.find(spec.name);
  if (it == table.end()) throw FamilyError("unknown family '" + spec.name + "'");
  return it->second(Params(spec));
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> info = {
      {"complete", {"n"}, "n >= 0", "K_n", {"Thm16"}},
      {"empty", {"n"}, "n >= 0", "edgeless graph on n vertices", {"Thm28"}},
      {"completeBipartite", {"a", "b"}, "a, b >= 0", "K_{a,b} with parts 0..a-1 and a..a+b-1",
       {"Thm8", "Thm11", "Thm13", "Thm16", "Thm19", "Thm38", "Thm47", "Thm53", "Thm54"}},
      {"path", {"n"}, "n >= 1", "P_n", {}},
      {"cycle", {"n"}, "n >= 3", "C_n", {}},
      {"star", {"m"}, "m >= 1", "K_{1,m}, centre 0", {"Thm26"}},
      {"petersen", {}, "", "Petersen graph: outer 5-cycle, inner pentagram, spokes",
       {"Thm8", "Thm9", "Thm20", "Thm26", "Thm48", "T19"}},
      {"tutte", {}, "", "Tutte's 46-vertex 3-connected planar non-hamiltonian graph", {"Thm19"}},
      {"tKa", {"t", "a"}, "t >= 0, a >= 1", "t disjoint copies of K_a", {"Thm44"}},
      {"tKa_join_Kb", {"t", "a", "b"}, "t >= 0, a >= 1, b >= 0", "tK_a + K_b",
       {"Thm5", "Thm6", "Thm10", "Thm12", "Thm14", "Thm15", "Thm31", "Thm32", "Thm34", "Thm35", "Thm36", "Thm39",
        "Thm40", "Thm41", "Thm44", "Thm45", "Thm49", "Thm50", "Thm51", "Thm52", "Thm53", "Thm55", "Thm56", "Thm57",
        "ThmA"}},
      {"tKa_join_empty", {"t", "a", "b"}, "t >= 0, a >= 1, b >= 0", "tK_a joined to b independent vertices",
       {"Thm17", "Thm31", "Thm33"}},
      {"join2Kd-K1", {"delta"}, "delta >= 1", "2K_delta + K_1", {"Thm6", "Thm10", "Thm32", "Thm53", "ThmA"}},
      {"H", {"a", "b", "t", "k"}, "a, b, t >= 1, 0 <= k <= t",
       "tK_a + Kbar_t, plus a disjoint K_b joined to the first k vertices of Kbar_t",
       {"Thm10", "Thm12", "Thm14", "Thm15", "Thm32", "Thm34", "Thm35", "Thm36", "Thm49", "Thm52", "Thm56"}},
      {"L", {"delta"}, "delta >= 1", "3K_delta + K_1 with a triangle on one vertex of each K_delta",
       {"Thm11", "Thm13", "Thm33", "Thm47", "Thm54"}},
      {"Gn", {"n", "delta"}, "odd n >= 15, n/3 <= delta <= (n-5)/2",
       "Kbar_{(n-1)/2}, K_delta, K_{(n+1)/2-delta}; K_delta joined to all, matching on lowest indices", {}},
      {"Gstar", {"n"}, "odd n >= 15", "G_n with K_delta replaced by Kbar_delta, delta = (n-5)/2",
       {"Thm8", "Thm33", "Thm54"}},
      {"cliquePendant", {"n"}, "n >= 2", "K_{n-1} with one vertex joined to an extra K_1", {"Thm1"}},
      {"erdosExtremal", {"n", "delta"}, "1 <= delta <= n/2",
       "K_{n-delta} with delta of its vertices joined to delta independent vertices", {"Thm2"}},
      {"kttMinusStar", {"t"}, "t >= 1", "K_{t,t} minus t-1 edges at a common vertex", {"Thm3"}},
      {"moonMoser", {"n", "delta"}, "even n, 1 <= delta <= n/2",
       "X = P u Q, Y = R u S, |P| = |R| = delta, N(P) = R, N(Q) = Y", {"Thm4", "Thm46"}},
      {"moonMoserZ", {"n"}, "n divisible by 4",
       "quarter blocks P, Q, R, S; N(P) = R, N(Q - z) = S, N(z) = Y", {"Thm46"}},
      {"thetaGadget", {}, "", "three x-y-z-w paths with the x ends and the w ends identified", {"Thm7"}},
      {"toughGadget", {}, "", "K_5 on x_i, K_{5,2} on y_i and two more, matching x_i y_i", {"Thm9"}},
      {"toughGadgetAlt", {}, "", "K_{5,2} on x_i and y_1, y_2, K_5 on z_i, matching x_i z_i", {"Thm48"}},
      {"nineEdgeGadget", {}, "", "v_1..v_8: hexagon v_1..v_6 plus the path v_1 v_7 v_8 v_4", {"Thm31"}},
      {"bridgedCliques", {"delta"}, "delta >= 1", "two copies of K_{delta+1} joined by an edge", {"Thm37"}},
      {"windmill", {"lambda", "t", "r"}, "lambda >= 2, t >= 0, 0 <= r < lambda - 1",
       "t copies of K_lambda and one K_{r+1} sharing one vertex", {"Thm42"}},
      {"sharedClique", {"n", "lambda", "t"}, "1 <= t <= lambda + 1 - t <= n",
       "K_{lambda+1-t} plus isolated vertices each joined to the same t clique vertices", {"Thm43"}},
      {"subdividedClaw", {"length"}, "length >= 1 (default 2)", "centre with three pendant paths", {"Thm18"}},
  };
  return info;
}

}  // namespace cyclekit
