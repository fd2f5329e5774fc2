#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclekit/graph_io.hpp"
#include "cyclekit/registry.hpp"

using namespace cyclekit;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  bool timing = false;
  std::string input;
  std::string format = "auto";
  int ceiling = kEnumerationCeiling;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_input(const Globals& g) {
  static const std::map<std::string, GraphFormat> formats = {{"auto", GraphFormat::kAuto},
                                                             {"graph6", GraphFormat::kGraph6},
                                                             {"edgelist", GraphFormat::kEdgeList},
                                                             {"dimacs", GraphFormat::kDimacs}};
  const GraphFormat f = formats.at(g.format);
  if (g.input.empty() || g.input == "-") return read_graphs(std::cin, f);
  std::ifstream in(g.input);
  if (!in) throw UsageError("cannot open " + g.input);
  return read_graphs(in, f);
}

const TheoremSpec& theorem(const std::string& id) {
  const auto* t = find_theorem(id);
  if (!t) throw UsageError("unknown theorem id '" + id + "'; see `cyclekit catalog`");
  return *t;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like a..b, got '" + text + "'");
  }
}

// ---- invariants ----

int run_invariants(const Globals& g) {
  for (const auto& graph : read_input(g)) {
    const std::string g6 = encode_graph6(graph);
    const auto report = compute_report(graph);
    if (g.json) {
      std::istringstream lines(format_report_records(report));
      for (std::string line; std::getline(lines, line);) {
        json j = json::parse(line);
        json out;
        out["graph6"] = g6;
        for (auto& [k, v] : j.items()) out[k] = v;
        std::cout << out.dump() << "\n";
      }
    } else {
      std::cout << "graph6 " << g6 << "\n" << format_report_text(report);
    }
  }
  return 0;
}

// ---- solve ----

void emit(const Globals& g, const std::string& g6, const std::string& task, const std::string& result,
          const std::string& certificate, std::optional<int> value = std::nullopt) {
  if (g.json) {
    json j;
    j["graph6"] = g6;
    j["task"] = task;
    j["result"] = result;
    j["value"] = value ? json(*value) : json(nullptr);
    j["certificate"] = certificate;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << result;
  if (value) std::cout << " " << *value;
  if (!certificate.empty()) std::cout << ": " << certificate;
  std::cout << "\n";
}

CycleCondition parse_condition(const std::vector<std::string>& args, std::size_t at) {
  if (at >= args.size()) throw UsageError("expected dominating, cd <lambda> or pd <lambda>");
  const std::string& kind = args[at];
  if (kind == "dominating") return {CycleProperty::kDominating, 0};
  if (kind != "cd" && kind != "pd") throw UsageError("unknown cycle property '" + kind + "'");
  if (at + 1 >= args.size()) throw UsageError(kind + " needs a lambda argument");
  int lambda = 0;
  try {
    lambda = std::stoi(args[at + 1]);
  } catch (const std::exception&) {
    throw UsageError("lambda must be an integer");
  }
  if (lambda < 1) throw UsageError("lambda must be at least 1");
  return {kind == "cd" ? CycleProperty::kCD : CycleProperty::kPD, lambda};
}

int run_solve(const Globals& g, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("solve needs a task: hamilton, circumference, longest-path, every-longest, cd");
  const std::string task = args[0];
  static const std::set<std::string> known = {"hamilton", "circumference", "longest-path", "every-longest",
                                              "dominating", "cd", "pd"};
  if (!known.count(task)) throw UsageError("unknown solve task '" + task + "'");
  std::optional<CycleCondition> cond;
  if (task == "every-longest") cond = parse_condition(args, 1);
  if (task == "dominating" || task == "cd" || task == "pd") cond = parse_condition(args, 0);
  const auto graphs = read_input(g);
  for (const auto& graph : graphs) {
    const std::string g6 = encode_graph6(graph);
    try {
      if (task == "hamilton") {
        const auto h = hamiltonian(graph);
        emit(g, g6, task, h ? "hamiltonian" : "non-hamiltonian", h ? h->to_string() : "");
      } else if (task == "circumference") {
        const auto c = circumference(graph);
        emit(g, g6, task, "circumference", c.cycle.to_string(), c.length);
      } else if (task == "longest-path") {
        const auto p = longest_path(graph);
        emit(g, g6, task, "longest-path", p.path.to_string(), p.length);
      } else if (task == "every-longest") {
        const auto u = every_longest_cycle_satisfies(graph, *cond, g.ceiling);
        const std::string what = u.holds ? "every longest cycle is " + describe(*cond)
                                         : "some longest cycle is not " + describe(*cond);
        emit(g, g6, "every-longest " + describe(*cond), what, u.counterexample ? u.counterexample->to_string() : "",
             u.circumference);
      } else {
        const auto c = find_cycle_satisfying(graph, *cond, g.ceiling);
        emit(g, g6, describe(*cond), c ? describe(*cond) + " cycle" : "no " + describe(*cond) + " cycle",
             c ? c->to_string() : "");
      }
    } catch (const CeilingExceeded& e) {
      emit(g, g6, task, "ceiling", e.what());
    }
  }
  return 0;
}

// ---- free ----

int run_free(const Globals& g, const std::string& patterns) {
  std::vector<PatternGraph> ps;
  try {
    ps = parse_pattern_list(patterns);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& graph : read_input(g)) {
    const std::string g6 = encode_graph6(graph);
    bool all = true;
    json rows = json::array();
    std::string text;
    for (const auto& p : ps) {
      const auto map = contains_induced(graph, p);
      std::string where;
      if (map) {
        for (int v : *map) where += (where.empty() ? "" : " ") + std::to_string(v);
      }
      all = all && !map;
      rows.push_back({{"pattern", p.name}, {"free", !map}, {"induced", where}});
      text += p.name + (map ? " contained on " + where : " free") + "\n";
    }
    if (g.json) {
      json j;
      j["graph6"] = g6;
      j["free"] = all;
      j["patterns"] = rows;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "graph6 " << g6 << "\n" << text << (all ? "free of all patterns" : "not free") << "\n";
    }
  }
  return 0;
}

// ---- construct ----

int run_construct(const Globals& g, const std::string& name, const std::vector<std::string>& extras, bool list) {
  if (list) {
    for (const auto& f : list_families()) {
      std::string params;
      for (const auto& p : f.params) params += (params.empty() ? "" : ",") + p;
      if (g.json) {
        json j;
        j["name"] = f.name;
        j["params"] = f.params;
        j["domain"] = f.domain;
        j["description"] = f.description;
        j["citedBy"] = f.cited_by;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << f.name << "(" << params << ")  " << f.description;
        if (!f.domain.empty()) std::cout << "  [" << f.domain << "]";
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (name.empty()) throw UsageError("construct needs a family name; use --list to see them");
  FamilySpec spec;
  try {
    spec = parse_family_spec(name);
  } catch (const FamilyError& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& flag = extras[i];
    if (flag.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + flag + "'");
    std::string key = flag.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw UsageError(flag + " needs a value");
      value = extras[++i];
    }
    try {
      spec.params[key] = std::stoi(value);
    } catch (const std::exception&) {
      throw UsageError(flag + " needs an integer value");
    }
  }
  Graph graph;
  try {
    graph = build(spec);
  } catch (const FamilyError& e) {
    throw UsageError(e.what());
  }
  if (g.json) {
    json j;
    j["family"] = spec.to_string();
    j["graph6"] = encode_graph6(graph);
    j["n"] = graph.order();
    j["q"] = graph.size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << encode_graph6(graph) << "\n";
  }
  return 0;
}

// ---- check ----

void print_verdict(const Globals& g, const std::string& g6, const Verdict& v) {
  if (g.json) {
    std::cout << verdict_record(g6, v, g.timing) << "\n";
    return;
  }
  std::cout << v.theorem;
  if (v.lambda) std::cout << " [lambda=" << *v.lambda << "]";
  std::cout << ": " << outcome_name(v.outcome) << " - " << v.detail;
  if (!v.witness.empty()) std::cout << " [" << v.witness << "]";
  if (!v.assumed.empty()) {
    std::cout << " (assumed:";
    for (const auto& a : v.assumed) std::cout << " " << a;
    std::cout << ")";
  }
  if (g.timing) std::cout << " " << v.millis << "ms";
  std::cout << "\n";
}

int run_check(const Globals& g, const std::string& id, const std::vector<std::string>& assume,
              std::optional<int> lambda, bool verbose) {
  CheckOptions opts;
  opts.lambda = lambda;
  opts.enumeration_ceiling = g.ceiling;
  for (const auto& a : assume) {
    const auto c = parse_class(a);
    if (!c) throw UsageError("unknown class '" + a + "'");
    opts.assume.insert(*c);
  }
  const TheoremSpec* only = id == "all" ? nullptr : &theorem(id);
  bool violated = false;
  for (const auto& graph : read_input(g)) {
    const std::string g6 = encode_graph6(graph);
    if (only) {
      const auto verdicts = check(graph, *only, opts);
      if (!g.json && verdicts.size() > 1) {
        std::cout << only->id << ": " << outcome_name(overall(verdicts)) << " over " << verdicts.size()
                  << " values of lambda\n";
      }
      for (const auto& v : verdicts) {
        violated = violated || v.outcome == Outcome::kViolated;
        print_verdict(g, g6, v);
      }
      continue;
    }
    const auto report = check_all(graph, opts);
    violated = violated || report.any_violated();
    if (!g.json) std::cout << "graph6 " << g6 << "\n";
    for (const auto& e : report.entries) {
      if (g.json || verbose) {
        for (const auto& v : e.verdicts) print_verdict(g, g6, v);
      } else {
        // One line per entry; the deciding verdict stands for lambda entries.
        for (const auto& v : e.verdicts) {
          if (v.outcome == e.outcome) {
            print_verdict(g, g6, v);
            break;
          }
        }
      }
    }
    if (!g.json) {
      std::cout << "summary";
      for (const auto& [o, count] : report.counts) std::cout << " " << outcome_name(o) << "=" << count;
      std::cout << "\n";
    }
  }
  return violated ? 1 : 0;
}

// ---- audit ----

int run_audit(const Globals& g, const std::string& id, const std::string& range) {
  AuditOptions opts;
  if (!range.empty()) opts.range = parse_range(range);
  opts.enumeration_ceiling = std::max(g.ceiling, opts.enumeration_ceiling);
  std::vector<const TheoremSpec*> targets;
  if (id == "all") {
    for (const auto& t : catalog()) {
      if (!t.sharpness.empty()) targets.push_back(&t);
    }
  } else {
    targets.push_back(&theorem(id));
  }
  bool all_pass = true;
  for (const auto* t : targets) {
    const auto report = audit_sharpness(*t, opts);
    const bool ok = report.all_pass() || report.cases.empty();
    all_pass = all_pass && ok;
    for (const auto& c : report.cases) {
      if (g.json) {
        json j;
        j["theoremId"] = report.theorem;
        j["example"] = c.example;
        j["family"] = c.spec;
        j["lambda"] = c.lambda ? json(*c.lambda) : json(nullptr);
        j["graph6"] = c.graph6;
        j["expected"] = role_name(c.expected) + (c.premise.empty() ? "" : "(" + c.premise + ")");
        j["observed"] = c.observed;
        j["result"] = c.pass ? "PASS" : "FAIL";
        j["detail"] = c.detail;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (c.pass ? "PASS " : "FAIL ") << report.theorem << " " << c.spec;
        if (c.lambda) std::cout << " lambda=" << *c.lambda;
        std::cout << " expected " << role_name(c.expected) << (c.premise.empty() ? "" : "(" + c.premise + ")")
                  << " observed " << c.observed << "\n    " << c.detail << "\n";
      }
    }
    if (!g.json) {
      std::cout << report.theorem << ": " << report.passed() << "/" << report.cases.size() << " cases pass\n";
    }
  }
  return all_pass ? 0 : 1;
}

// ---- sweep ----

int run_sweep(const Globals& g, const Ensemble& e) {
  if (e.count < 0) throw UsageError("--count must be nonnegative");
  if (e.p < 0 || e.p > 1) throw UsageError("--p must lie in [0, 1]");
  CheckOptions opts;
  opts.enumeration_ceiling = g.ceiling;
  SweepReport report;
  try {
    report = sweep(e, opts);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  static const Outcome order[] = {Outcome::kHolds, Outcome::kVacuous, Outcome::kInapplicable, Outcome::kCeiling,
                                  Outcome::kError, Outcome::kViolated};
  if (g.json) {
    for (const auto& [id, tally] : report.tallies) {
      json j;
      j["theoremId"] = id;
      j["graphs"] = report.graphs;
      for (Outcome o : order) j[outcome_name(o)] = tally.counts.count(o) ? tally.counts.at(o) : 0;
      j["meanSlack"] = tally.slack_count
                           ? json((tally.slack_sum / ExactNumber(tally.slack_count)).to_string())
                           : json(nullptr);
      std::cout << j.dump() << "\n";
    }
    for (const auto& v : report.violations) {
      std::cout << verdict_record(v.graph6, v.verdict, g.timing) << "\n";
    }
    json s;
    s["graphs"] = report.graphs;
    s["violations"] = report.violations.size();
    s["quarantinedViolations"] = report.quarantined_violations.size();
    s["sigmaReadingDiffers"] = report.sigma_reading_differs;
    std::cout << s.dump() << "\n";
  } else {
    std::cout << "graphs " << report.graphs << "\n";
    std::cout << "theorem    holds  vacuous  inapplicable  ceiling  error  VIOLATED  holds-rate  mean-slack\n";
    for (const auto& [id, tally] : report.tallies) {
      auto count = [&](Outcome o) { return tally.counts.count(o) ? tally.counts.at(o) : 0; };
      std::ostringstream line;
      line << id;
      for (std::size_t pad = id.size(); pad < 10; ++pad) line << ' ';
      for (Outcome o : order) line << ' ' << count(o);
      const int applicable = count(Outcome::kHolds) + count(Outcome::kViolated);
      line << ' ' << (applicable ? std::to_string(count(Outcome::kHolds)) + "/" + std::to_string(applicable) : "-");
      line << ' '
           << (tally.slack_count ? (tally.slack_sum / ExactNumber(tally.slack_count)).to_string() : std::string("-"));
      std::cout << line.str() << "\n";
    }
    std::cout << "violations " << report.violations.size() << " (quarantined "
              << report.quarantined_violations.size() << ")\n";
    std::cout << "sigma reading differs on " << report.sigma_reading_differs << " graphs\n";
    for (const auto& v : report.violations) std::cout << "---- VIOLATED\n" << v.transcript;
    for (const auto& v : report.quarantined_violations) std::cout << "---- quarantined\n" << v.transcript;
  }
  return report.violations.empty() ? 0 : 1;
}

// ---- catalog ----

int run_catalog(const Globals& g) {
  for (const auto& t : catalog()) {
    if (g.json) {
      json j;
      j["id"] = t.id;
      j["aliases"] = t.aliases;
      j["citation"] = t.citation;
      j["statement"] = t.statement();
      j["quarantined"] = quarantine().count(t.id) > 0;
      j["sharpnessExamples"] = t.sharpness.size();
      j["notes"] = t.notes;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << t.id;
      if (!t.aliases.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < t.aliases.size(); ++i) std::cout << (i ? ", " : "") << t.aliases[i];
        std::cout << ")";
      }
      std::cout << "  " << t.citation;
      if (quarantine().count(t.id)) std::cout << "  [quarantined]";
      std::cout << "\n    " << t.statement() << "\n";
      if (!t.notes.empty()) std::cout << "    note: " << t.notes << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of hamiltonicity and long-cycle theorems on small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Line-delimited JSON records");
  app.add_flag("--timing", g.timing, "Include per-verdict timing");
  app.add_option("-i,--input", g.input, "Input file (default stdin)");
  app.add_option("--format", g.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist", "dimacs"}));
  app.add_option("--ceiling", g.ceiling, "Enumeration ceiling for every-longest-cycle conclusions")
      ->check(CLI::Range(1, kMaxOrder));

  auto* inv = app.add_subcommand("invariants", "Invariant report per graph");

  std::vector<std::string> solve_args;
  auto* solve = app.add_subcommand("solve", "hamilton | circumference | longest-path | every-longest <prop> | cd <l>");
  solve->add_option("task", solve_args, "Task and arguments")->required();

  std::string patterns;
  auto* free = app.add_subcommand("free", "Forbidden induced subgraph test");
  free->add_option("--patterns", patterns, "Comma-separated patterns, e.g. claw,P6")->required();

  std::string family;
  bool list = false;
  auto* construct = app.add_subcommand("construct", "Build a named family member, e.g. join2Kd-K1 --delta 4");
  construct->add_option("family", family, "Family name or spec H(a=1,b=2,t=4,k=3)");
  construct->add_flag("--list", list, "List families");
  construct->allow_extras();
  construct->fallthrough(false);

  std::string id = "all";
  std::vector<std::string> assume;
  std::optional<int> lambda;
  bool verbose = false;
  auto* chk = app.add_subcommand("check", "Verify catalog entries on each input graph");
  chk->add_option("--theorem", id, "Theorem id or alias, or 'all'");
  chk->add_option("--assume", assume, "Assert an undecidable class (interval, cocomparability, ...)");
  chk->add_option("--lambda", lambda, "Fix lambda for parameterised entries");
  chk->add_flag("--verbose", verbose, "With --theorem all, print every lambda verdict");

  std::string audit_id;
  std::string range;
  auto* aud = app.add_subcommand("audit", "Sharpness audit of a theorem's examples");
  aud->add_option("--theorem", audit_id, "Theorem id, alias, or 'all'")->required();
  aud->add_option("--range", range, "Parameter range a..b overriding each example's default");

  Ensemble ens;
  std::string model = "gnp";
  auto* swp = app.add_subcommand("sweep", "Random-ensemble soundness sweep");
  swp->add_option("--model", model, "gnp | regular | bipartite")->check(CLI::IsMember({"gnp", "regular", "bipartite"}));
  swp->add_option("--n", ens.n, "Order (first part for bipartite)")->check(CLI::Range(0, kMaxOrder));
  swp->add_option("--p", ens.p, "Edge probability");
  swp->add_option("--d", ens.d, "Degree for regular graphs");
  swp->add_option("--n2", ens.n2, "Second part for bipartite graphs");
  swp->add_option("--count", ens.count, "Number of graphs");
  swp->add_option("--seed", ens.seed, "Seed");

  auto* cat = app.add_subcommand("catalog", "List catalog entries with citations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inv) return run_invariants(g);
    if (*solve) return run_solve(g, solve_args);
    if (*free) return run_free(g, patterns);
    if (*construct) return run_construct(g, family, construct->remaining(), list);
    if (*chk) return run_check(g, id, assume, lambda, verbose);
    if (*aud) return run_audit(g, audit_id, range);
    if (*swp) {
      ens.model = model == "gnp" ? Ensemble::Model::kGnp
                  : model == "regular" ? Ensemble::Model::kRegular
                                       : Ensemble::Model::kBipartite;
      return run_sweep(g, ens);
    }
    if (*cat) return run_catalog(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
