// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status counts failing criteria that are not on the known-red list
// below, plus listed criteria that unexpectedly pass (the list must stay
// accurate). A known-red criterion still prints FAIL with its analysis.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclekit/cycles.hpp"
#include "cyclekit/graph_io.hpp"
#include "cyclekit/invariants.hpp"
#include "cyclekit/named_graphs.hpp"
#include "cyclekit/registry.hpp"
#include "cyclekit/structure.hpp"
#include "oracles.hpp"

using namespace cyclekit;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

const std::map<int, std::string> kKnownRed = {
    {3,
     "the tough gadget offered for Thm9/Thm48 has toughness 6/5 (delete V_2 and x_1..x_4: 6 vertices, "
     "5 components), so it does not meet tau > 4/3; the Thm31 delta >= 3 examples also fail as printed"},
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<Graph> gnp_corpus(int count, int lo, int hi, const std::vector<double>& probs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  const int orders = hi - lo + 1;
  for (int i = 0; i < count; ++i) {
    const int n = lo + i % orders;
    const double p = probs[static_cast<std::size_t>(i / orders) % probs.size()];
    out.push_back(random_gnp(n, p, rng));
  }
  return out;
}

std::vector<Graph> all_six_vertex_graphs() {
  std::vector<Graph> out;
  out.reserve(1U << 15);
  for (std::uint64_t code = 0; code < (1U << 15); ++code) out.push_back(oracle::from_code(6, code));
  return out;
}

const std::vector<Graph>& sweep_corpus() {
  static const std::vector<Graph> corpus = gnp_corpus(10'000, 7, 12, {0.2, 0.5, 0.8}, 20260101);
  return corpus;
}

Result soundness() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  const auto six = sweep_graphs(all_six_vertex_graphs());
  const auto random = sweep_graphs(sweep_corpus());
  const double secs = seconds_since(start);
  for (const auto* rep : {&six, &random}) {
    for (const auto& v : rep->violations) r.note("VIOLATED " + v.verdict.theorem + " on " + v.graph6);
  }
  r.require(six.graphs == 32768, "all 2^15 labelled graphs on 6 vertices checked");
  r.require(random.graphs == 10'000, "10,000 G(n,p) graphs checked");
  r.require(six.violations.empty() && random.violations.empty(), "zero VIOLATED outside quarantine");
  r.require(secs <= 600, "runtime within 10 minutes");
  std::ostringstream s;
  s << six.graphs + random.graphs << " graphs, " << six.violations.size() + random.violations.size()
    << " violations, " << six.quarantined_violations.size() + random.quarantined_violations.size()
    << " quarantined, " << static_cast<int>(secs) << " s";
  r.note(s.str());
  return r;
}

Result petersen_dossier() {
  Result r;
  const Graph g = petersen_graph();
  const auto p = degree_profile(g);
  r.require(p.order == 10 && p.size == 15, "n = 10, q = 15");
  r.require(p.min_degree == 3 && vertex_connectivity(g).size == 3, "delta = kappa = 3");
  r.require(maximum_independent_set(g).size == 4, "alpha = 4");
  r.require(toughness(g).value == ExactNumber(4, 3), "tau = 4/3");
  r.require(!hamiltonian(g) && !hamiltonian_dp_oracle(g), "non-hamiltonian");
  const auto c = circumference(g);
  r.require(c.length == 9 && is_valid_cycle(g, c.cycle) && oracle::circumference(g) == 9, "c = 9");
  const std::vector<PatternGraph> triangle{net_pattern(0, 0, 0)};
  r.require(is_free(g, triangle), "triangle-free");
  const auto claw = contains_induced(g, claw_pattern());
  r.require(claw && verify_induced_map(g, star_graph(3), *claw), "induced claw");
  const auto every = every_longest_cycle_satisfies(g, {CycleProperty::kDominating, 0});
  bool naive = true;
  for (const auto& cyc : oracle::longest_cycles(g)) naive = naive && oracle::dominating(g, cyc);
  r.require(every.holds && naive, "every longest cycle dominating");
  const auto t19 = check(g, *find_theorem("T19"));
  r.require(t19.size() == 1 && t19[0].outcome == Outcome::kHolds &&
                t19[0].detail.find("Petersen") != std::string::npos,
            "T19 holds through the Petersen branch");
  r.require(9 < std::min(10, 2 * 3 + 5), "T19 bound branch alone fails (c = 9 < 10)");
  return r;
}

Result sharpness_audits() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  struct Item {
    std::string id;
    std::optional<std::pair<int, int>> range;
  };
  const std::vector<Item> items{{"Thm6", std::make_pair(2, 5)},
                                {"Thm31", std::nullopt},
                                {"Thm32", std::make_pair(3, 6)},
                                {"Thm7", std::nullopt},
                                {"Thm9", std::nullopt},
                                {"Thm48", std::nullopt},
                                {"Thm39", std::nullopt},
                                {"Thm40", std::nullopt}};
  for (const auto& item : items) {
    AuditOptions opts;
    opts.range = item.range;
    const auto rep = audit_sharpness(*find_theorem(item.id), opts);
    std::ostringstream s;
    s << item.id << " " << rep.passed() << "/" << rep.cases.size();
    r.note(s.str());
    r.require(!rep.cases.empty(), item.id + " has audit cases");
    for (const auto& c : rep.cases) {
      r.require(c.pass, item.id + " " + c.spec + " expected " + role_name(c.expected) + " observed " + c.observed);
    }
  }
  // The residual equality family for kappa in {2, 3}, delta in kappa+1..kappa+3.
  int family = 0;
  for (const char* id : {"Thm39", "Thm40"}) {
    for (const auto& c : audit_sharpness(*find_theorem(id)).cases) {
      if (c.spec.rfind("tKa_join_Kb", 0) == 0 && c.pass) ++family;
    }
  }
  r.require(family == 14, "Thm39/40 equality on all 2 x 7 instances");
  const double secs = seconds_since(start);
  r.require(secs <= 120, "runtime within 2 minutes");
  return r;
}

Result oracle_equivalence() {
  Result r;
  auto graphs = gnp_corpus(12'000, 1, 12, {0.2, 0.35, 0.5, 0.65, 0.8}, 4);
  int disagree = 0;
  for (const auto& g : graphs) {
    const auto h = hamiltonian(g);
    if (h.has_value() != hamiltonian_dp_oracle(g)) ++disagree;
    if (h && (!is_valid_cycle(g, *h) || h->length() != g.order())) ++disagree;
  }
  r.require(disagree == 0, std::to_string(disagree) + " Hamiltonicity disagreements");
  int circ = 0;
  for (const auto& g : gnp_corpus(1'000, 1, 9, {0.2, 0.4, 0.6, 0.8}, 5)) {
    const auto c = circumference(g);
    if (c.length != oracle::circumference(g)) ++circ;
    if (g.order() > 0 && !is_valid_cycle(g, c.cycle)) ++circ;
  }
  r.require(circ == 0, std::to_string(circ) + " circumference disagreements");
  r.note(std::to_string(graphs.size()) + " Hamiltonicity instances, 1000 circumference instances");
  return r;
}

Result invariant_oracles() {
  Result r;
  std::map<std::string, int> bad;
  for (const auto& g : gnp_corpus(2'000, 1, 8, {0.2, 0.4, 0.6, 0.8}, 6)) {
    if (toughness(g).value != oracle::toughness(g)) ++bad["tau"];
    if (binding_number(g).value != oracle::binding(g)) ++bad["b"];
    if (maximum_independent_set(g).size != oracle::alpha(g)) ++bad["alpha"];
    if (vertex_connectivity(g).size != oracle::kappa(g)) ++bad["kappa"];
    if (sigma(g, 2) != oracle::sigma(g, 2)) ++bad["sigma_2"];
    if (delta_at_distance(g, 2) != oracle::delta_t(g, 2)) ++bad["delta_2"];
  }
  for (const auto& [k, v] : bad) r.require(false, k + ": " + std::to_string(v) + " disagreements");
  return r;
}

Result fleischner() {
  Result r;
  std::mt19937_64 rng(7);
  int found = 0;
  int tries = 0;
  int bad = 0;
  while (found < 500 && tries < 100'000) {
    ++tries;
    const int n = 3 + tries % 10;
    const Graph g = random_gnp(n, 0.2 + 0.1 * (tries % 4), rng);
    if (vertex_connectivity(g).size < 2) continue;
    ++found;
    const Graph sq = power(g, 2);
    const auto h = hamiltonian(sq);
    if (!h || h->length() != n || !is_valid_cycle(sq, *h)) ++bad;
  }
  r.require(found == 500, "500 two-connected graphs generated");
  r.require(bad == 0, std::to_string(bad) + " squares without a certified Hamilton cycle");
  return r;
}

Result chain() {
  Result r;
  int connected = 0;
  int bad = 0;
  auto check_graph = [&](const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return;
    ++connected;
    const ExactNumber d(degree_profile(g).min_degree);
    const ExactNumber k(vertex_connectivity(g).size);
    const ExactNumber s2 = sigma(g, 2);
    const ExactNumber s3 = sigma(g, 3);
    const ExactNumber d2 = delta_at_distance(g, 2);
    bool ok = k <= d;
    if (!s2.is_infinite()) ok = ok && d <= s2 / ExactNumber(2);
    if (!s2.is_infinite() && !s3.is_infinite()) ok = ok && s2 / ExactNumber(2) <= s3 / ExactNumber(3);
    if (!d2.is_infinite()) ok = ok && d <= d2;
    if (!ok) ++bad;
  };
  for (const auto& g : all_six_vertex_graphs()) check_graph(g);
  for (const auto& g : sweep_corpus()) check_graph(g);
  r.require(bad == 0, std::to_string(bad) + " chain violations");
  r.note(std::to_string(connected) + " connected graphs");
  return r;
}

Result graph6_round_trip() {
  Result r;
  int bad = 0;
  const auto graphs = gnp_corpus(10'000, 0, 64, {0.1, 0.5, 0.9}, 8);
  for (const auto& g : graphs) {
    const std::string s = encode_graph6(g);
    if (s != oracle::graph6(g) || parse_graph6(s) != g || encode_graph6(parse_graph6(s)) != s) ++bad;
  }
  r.require(bad == 0, std::to_string(bad) + " round-trip failures");
  r.require(parse_graph6("Bw") == complete_graph(3), "\"Bw\" is K_3");
  r.require(parse_graph6("C~") == complete_graph(4), "\"C~\" is K_4");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"soundness sweep", soundness},
      {"Petersen dossier", petersen_dossier},
      {"sharpness audits", sharpness_audits},
      {"solver oracles", oracle_equivalence},
      {"invariant oracles", invariant_oracles},
      {"squares of 2-connected graphs", fleischner},
      {"invariant chain", chain},
      {"graph6 round trip", graph6_round_trip},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const auto red = kKnownRed.find(id);
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " ("
              << static_cast<int>(seconds_since(start) * 1000) << " ms)";
    if (!r.pass && red != kKnownRed.end()) std::cout << " [known red]";
    std::cout << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    if (red != kKnownRed.end()) {
      std::cout << "    analysis: " << red->second << "\n";
      if (r.pass) {
        std::cout << "    now passes; drop it from the known-red list\n";
        ++unexpected;
      }
    } else if (!r.pass) {
      ++unexpected;
    }
    std::cout.flush();
  }
  return unexpected;
}
