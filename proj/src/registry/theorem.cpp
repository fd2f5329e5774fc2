#include <stdexcept>

#include "cyclekit/registry.hpp"

namespace cyclekit {

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
  }
  return "?";
}

namespace {

struct ClassEntry {
  GraphClass cls;
  const char* name;
  bool supported;
};

constexpr ClassEntry kClasses[] = {
    {GraphClass::kBipartite, "bipartite", true},
    {GraphClass::kBalancedBipartite, "balanced-bipartite", true},
    {GraphClass::kRegular, "regular", true},
    {GraphClass::kChordal, "chordal", true},
    {GraphClass::kSplit, "split", true},
    {GraphClass::kPlanar, "planar", true},
    {GraphClass::kInterval, "interval", false},
    {GraphClass::kCocomparability, "cocomparability", false},
    {GraphClass::kSpider, "spider", false},
    {GraphClass::kProjectivePlanar, "projective-planar", false},
    {GraphClass::kComparability, "comparability", false},
};

std::string pattern_names(const std::vector<PatternGraph>& patterns, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i) s += sep;
    s += patterns[i].name;
  }
  return s;
}

}  // namespace

std::string class_name(GraphClass c) {
  for (const auto& e : kClasses) {
    if (e.cls == c) return e.name;
  }
  return "?";
}

std::optional<GraphClass> parse_class(const std::string& name) {
  for (const auto& e : kClasses) {
    if (name == e.name) return e.cls;
  }
  if (name == "balanced") return GraphClass::kBalancedBipartite;
  if (name == "projective-plane" || name == "projective") return GraphClass::kProjectivePlanar;
  return std::nullopt;
}

bool class_supported(GraphClass c) {
  for (const auto& e : kClasses) {
    if (e.cls == c) return e.supported;
  }
  return false;
}

std::string Premise::text() const {
  switch (kind) {
    case Kind::kRelation: return lhs.to_string() + " " + relation_symbol(rel) + " " + rhs.to_string();
    case Kind::kFreeOfAll: return "{" + pattern_names(patterns, ", ") + "}-free";
    case Kind::kFreeOfSome: return "free of one of {" + pattern_names(patterns, ", ") + "}";
    case Kind::kClass: return "G is " + class_name(cls);
  }
  return "?";
}

Premise relation(std::string id, E lhs, Relation rel, E rhs) {
  Premise p;
  p.kind = Premise::Kind::kRelation;
  p.id = std::move(id);
  p.lhs = std::move(lhs);
  p.rel = rel;
  p.rhs = std::move(rhs);
  return p;
}

Premise free_of(std::string id, std::vector<PatternGraph> patterns) {
  Premise p;
  p.kind = Premise::Kind::kFreeOfAll;
  p.id = std::move(id);
  p.patterns = std::move(patterns);
  return p;
}

Premise free_of_some(std::string id, std::vector<PatternGraph> alternatives) {
  Premise p;
  p.kind = Premise::Kind::kFreeOfSome;
  p.id = std::move(id);
  p.patterns = std::move(alternatives);
  return p;
}

Premise in_class(std::string id, GraphClass c) {
  Premise p;
  p.kind = Premise::Kind::kClass;
  p.id = std::move(id);
  p.cls = c;
  return p;
}

std::string Conclusion::text() const {
  switch (kind) {
    case Kind::kHamiltonian: return "G is hamiltonian";
    case Kind::kExistsDominating: return "G has a dominating cycle";
    case Kind::kEveryLongestDominating: return "every longest cycle is dominating";
    case Kind::kExistsCD: return "G has a CD_{" + param.to_string() + "} cycle";
    case Kind::kEveryLongestCD: return "every longest cycle is a CD_{" + param.to_string() + "} cycle";
    case Kind::kCircumference: return "c " + relation_symbol(rel) + " " + bound.to_string();
    case Kind::kResidual: return "every longest cycle C: |C| >= " + bound.to_string();
    case Kind::kSquareHamiltonian: return "G^2 is hamiltonian";
    case Kind::kIsomorphicTo: return "G is the " + graph_name + " graph";
    case Kind::kDisjunction: {
      std::string s;
      for (std::size_t i = 0; i < alternatives.size(); ++i) {
        if (i) s += " or ";
        s += alternatives[i].text();
      }
      return s;
    }
  }
  return "?";
}

namespace {
Conclusion make(Conclusion::Kind kind) {
  Conclusion c;
  c.kind = kind;
  return c;
}
}  // namespace

Conclusion hamiltonian_conclusion() { return make(Conclusion::Kind::kHamiltonian); }
Conclusion exists_dominating() { return make(Conclusion::Kind::kExistsDominating); }
Conclusion every_longest_dominating() { return make(Conclusion::Kind::kEveryLongestDominating); }

Conclusion exists_cd(E lambda) {
  auto c = make(Conclusion::Kind::kExistsCD);
  c.param = std::move(lambda);
  return c;
}

Conclusion every_longest_cd(E lambda) {
  auto c = make(Conclusion::Kind::kEveryLongestCD);
  c.param = std::move(lambda);
  return c;
}

Conclusion circumference_at_least(E bound) {
  auto c = make(Conclusion::Kind::kCircumference);
  c.rel = Relation::kGe;
  c.bound = std::move(bound);
  return c;
}

Conclusion circumference_above(E bound) {
  auto c = make(Conclusion::Kind::kCircumference);
  c.rel = Relation::kGt;
  c.bound = std::move(bound);
  return c;
}

Conclusion residual_bound(E bound) {
  auto c = make(Conclusion::Kind::kResidual);
  c.bound = std::move(bound);
  return c;
}

Conclusion square_hamiltonian() { return make(Conclusion::Kind::kSquareHamiltonian); }

Conclusion isomorphic_to(std::string name, Graph g) {
  auto c = make(Conclusion::Kind::kIsomorphicTo);
  c.graph_name = std::move(name);
  c.graph = std::make_shared<const Graph>(std::move(g));
  return c;
}

Conclusion either(std::vector<Conclusion> alternatives) {
  if (alternatives.size() < 2) throw std::invalid_argument("disjunction needs two alternatives");
  auto c = make(Conclusion::Kind::kDisjunction);
  c.alternatives = std::move(alternatives);
  return c;
}

std::string role_name(Role r) {
  switch (r) {
    case Role::kPremiseTight: return "premise-tight";
    case Role::kConclusionTight: return "conclusion-tight";
    case Role::kPremiseNecessary: return "premise-necessary";
    case Role::kAny: return "any";
  }
  return "?";
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kInapplicable: return "inapplicable";
    case Outcome::kVacuous: return "vacuous";
    case Outcome::kHolds: return "holds";
    case Outcome::kViolated: return "VIOLATED";
    case Outcome::kCeiling: return "ceiling";
    case Outcome::kError: return "error";
  }
  return "?";
}

std::string TheoremSpec::statement() const {
  std::string s;
  if (lambda) s += "for " + lambda->lo.to_string() + " <= lambda <= " + lambda->hi.to_string() + ": ";
  std::vector<std::string> parts;
  if (n_floor != 3) parts.push_back("n >= " + std::to_string(n_floor));
  for (const auto& p : premises) parts.push_back(p.text());
  if (parts.empty()) {
    s += conclusion.text();
    return s;
  }
  s += "if ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  s += " then " + conclusion.text();
  return s;
}

}  // namespace cyclekit
