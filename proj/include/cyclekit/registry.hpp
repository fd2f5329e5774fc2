#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclekit/cycles.hpp"
#include "cyclekit/expr.hpp"
#include "cyclekit/families.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/invariants.hpp"
#include "cyclekit/structure.hpp"

namespace cyclekit {

enum class Relation { kGe, kGt, kLe, kLt };
std::string relation_symbol(Relation r);

enum class GraphClass {
  kBipartite,
  kBalancedBipartite,
  kRegular,
  kChordal,
  kSplit,
  kPlanar,
  kInterval,
  kCocomparability,
  kSpider,
  kProjectivePlanar,
  kComparability,
};
std::string class_name(GraphClass c);
std::optional<GraphClass> parse_class(const std::string& name);
/// Classes with an exact recogniser here.
bool class_supported(GraphClass c);

enum class Truth { kFalse, kTrue, kUnknown };

struct Premise {
  enum class Kind { kRelation, kFreeOfAll, kFreeOfSome, kClass };
  Kind kind = Kind::kRelation;
  /// Short handle used by sharpness examples, e.g. "kappa", "delta", "q".
  std::string id;
  E lhs = 0;
  Relation rel = Relation::kGe;
  E rhs = 0;
  std::vector<PatternGraph> patterns;
  GraphClass cls = GraphClass::kBipartite;
  bool implicit = false;

  std::string text() const;
};

Premise relation(std::string id, E lhs, Relation rel, E rhs);
Premise free_of(std::string id, std::vector<PatternGraph> patterns);
Premise free_of_some(std::string id, std::vector<PatternGraph> alternatives);
Premise in_class(std::string id, GraphClass c);

struct Conclusion {
  enum class Kind {
    kHamiltonian,
    kExistsDominating,
    kEveryLongestDominating,
    kExistsCD,        // lambda given by `param`
    kEveryLongestCD,  // lambda given by `param`
    kCircumference,   // c rel bound
    kResidual,                // every longest cycle C: c >= bound(pbar, cbar of C)
    kSquareHamiltonian,
    kIsomorphicTo,
    kDisjunction,
  };
  Kind kind = Kind::kHamiltonian;
  E param = 0;
  Relation rel = Relation::kGe;
  E bound = 0;
  std::string graph_name;
  std::shared_ptr<const Graph> graph;
  std::vector<Conclusion> alternatives;

  std::string text() const;
};

Conclusion hamiltonian_conclusion();
Conclusion exists_dominating();
Conclusion every_longest_dominating();
Conclusion exists_cd(E lambda);
Conclusion every_longest_cd(E lambda);
Conclusion circumference_at_least(E bound);
Conclusion circumference_above(E bound);
Conclusion residual_bound(E bound);
Conclusion square_hamiltonian();
Conclusion isomorphic_to(std::string name, Graph g);
Conclusion either(std::vector<Conclusion> alternatives);

enum class Role { kPremiseTight, kConclusionTight, kPremiseNecessary, kAny };
std::string role_name(Role r);

struct AuditInstance {
  FamilySpec spec;
  std::optional<int> lambda;
};

struct SharpnessExample {
  std::string label;
  Role role = Role::kAny;
  /// Premise id relaxed or dropped for the premise roles.
  std::string premise;
  /// Declared replacement for that premise; otherwise it is relaxed by epsilon.
  std::optional<Premise> replacement;
  ExactNumber epsilon = 1;
  /// Stronger conclusion that must fail for conclusion tightness.
  std::optional<Conclusion> stronger;
  /// Classes known to hold for the family (echoed in reports).
  std::vector<GraphClass> assume;
  /// Name of the audited range parameter; empty for a single fixed graph.
  std::string parameter;
  /// Default range of that parameter.
  int lo = 2;
  int hi = 5;
  std::function<std::vector<AuditInstance>(int value)> instances;
  std::string note;
};

struct LambdaDomain {
  E lo = 1;
  E hi = 1;
};

struct TheoremSpec {
  std::string id;
  std::vector<std::string> aliases;
  std::string citation;
  std::vector<Premise> premises;
  Conclusion conclusion;
  int n_floor = 3;
  std::optional<LambdaDomain> lambda;
  std::vector<SharpnessExample> sharpness;
  std::string notes;

  std::string statement() const;
};

const std::vector<TheoremSpec>& catalog();
/// Ids excluded from the soundness alarm.
const std::set<std::string>& quarantine();
/// Lookup by id or alias, case-sensitive; nullptr if unknown.
const TheoremSpec* find_theorem(const std::string& id);

enum class Outcome { kInapplicable, kVacuous, kHolds, kViolated, kCeiling, kError };
std::string outcome_name(Outcome o);

struct PremiseValue {
  std::string id;
  std::string text;
  Truth truth = Truth::kUnknown;
  std::string detail;
};

struct Verdict {
  std::string theorem;
  std::optional<int> lambda;
  Outcome outcome = Outcome::kVacuous;
  std::vector<PremiseValue> premises;
  std::vector<std::string> assumed;      // asserted classes used
  std::vector<std::string> unsupported;  // unverifiable premises not asserted
  std::string witness;
  std::string detail;
  std::optional<ExactNumber> slack;  // conclusion side minus bound, when defined
  double millis = 0;
};

struct CheckOptions {
  std::set<GraphClass> assume;
  std::optional<int> lambda;
  int enumeration_ceiling = kEnumerationCeiling;
};

/// Lazily computed invariants and solver results for one graph.
class GraphContext {
 public:
  explicit GraphContext(Graph g, int enumeration_ceiling = kEnumerationCeiling);
  ~GraphContext();
  GraphContext(const GraphContext&) = delete;
  GraphContext& operator=(const GraphContext&) = delete;

  const Graph& graph() const;
  ExactNumber value(Symbol s, int index);
  Truth in_class(GraphClass c);
  bool is_free(const std::vector<PatternGraph>& patterns);
  const LongestCycle& longest_cycle();
  const std::optional<CycleCert>& hamilton_cycle();
  const UniversalCheck& every_longest(CycleCondition cond);
  const std::optional<CycleCert>& exists_cycle(CycleCondition cond);
  bool square_hamiltonian();
  int enumeration_ceiling() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Verdicts for one theorem: one per lambda for parameterised entries,
/// otherwise a single verdict.
std::vector<Verdict> check(GraphContext& ctx, const TheoremSpec& thm, const CheckOptions& options = {});
std::vector<Verdict> check(const Graph& g, const TheoremSpec& thm, const CheckOptions& options = {});
/// Aggregate of per-lambda verdicts: violated > error > ceiling > holds > inapplicable > vacuous.
Outcome overall(const std::vector<Verdict>& verdicts);

struct EntryReport {
  std::string theorem;
  Outcome outcome = Outcome::kVacuous;
  std::vector<Verdict> verdicts;
};

struct CheckAllReport {
  std::vector<EntryReport> entries;
  std::map<Outcome, int> counts;
  bool any_violated() const;
};

/// Runs every catalog entry (aliases only once).
CheckAllReport check_all(const Graph& g, const CheckOptions& options = {});

struct AuditCase {
  std::string example;
  std::string spec;
  std::optional<int> lambda;
  std::string graph6;
  Role expected = Role::kAny;
  std::string premise;
  std::string observed;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::string theorem;
  std::vector<AuditCase> cases;
  int passed() const;
  bool all_pass() const;
};

struct AuditOptions {
  /// Overrides every example's own range; values outside an example's
  /// domain produce no instance.
  std::optional<std::pair<int, int>> range;
  int enumeration_ceiling = 18;
};

AuditReport audit_sharpness(const TheoremSpec& thm, const AuditOptions& options = {});

/// Seeded random graph models.
Graph random_gnp(int n, double p, std::mt19937_64& rng);
/// Uniform-ish d-regular graph via the pairing model with restarts.
Graph random_regular(int n, int d, std::mt19937_64& rng);
/// Parts 0..n1-1 and n1..n1+n2-1, each cross pair with probability p.
Graph random_bipartite(int n1, int n2, double p, std::mt19937_64& rng);

struct Ensemble {
  enum class Model { kGnp, kRegular, kBipartite };
  Model model = Model::kGnp;
  int n = 10;
  double p = 0.5;
  int d = 3;
  int n2 = 0;  // bipartite second part; 0 means n2 = n
  int count = 100;
  std::uint64_t seed = 1;
};

struct TheoremTally {
  std::map<Outcome, int> counts;
  ExactNumber slack_sum = 0;
  int slack_count = 0;
};

struct Violation {
  std::string graph6;
  Verdict verdict;
  std::string transcript;
};

struct SweepReport {
  int graphs = 0;
  std::map<std::string, TheoremTally> tallies;  // by theorem id
  std::vector<Violation> violations;            // quarantined entries excluded
  std::vector<Violation> quarantined_violations;
  int sigma_reading_differs = 0;
  std::vector<std::string> sigma_reading_examples;
};

std::vector<Graph> generate(const Ensemble& e);
/// check_all over a list of graphs, tallied per theorem.
SweepReport sweep_graphs(const std::vector<Graph>& graphs, const CheckOptions& options = {});
SweepReport sweep(const Ensemble& e, const CheckOptions& options = {});

/// Full certificate bundle for a verdict: invariant report plus verdict details.
std::string transcript(const Graph& g, const Verdict& v);

/// One JSON object per line: {graph6, theoremId, lambda, verdict, witness, timing, ...}.
/// Timing is null unless requested, so default output is reproducible.
std::string verdict_record(const std::string& graph6, const Verdict& v, bool timing = false);

}  // namespace cyclekit
