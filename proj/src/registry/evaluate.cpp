#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cyclekit/graph_io.hpp"
#include "internal.hpp"

namespace cyclekit {

struct GraphContext::Impl {
  Graph g;
  int ceiling;
  std::optional<DegreeProfile> degrees;
  std::optional<int> kappa;
  std::optional<int> alpha;
  std::optional<ExactNumber> tau;
  std::optional<ExactNumber> binding;
  std::map<int, ExactNumber> sigma;
  std::map<int, ExactNumber> delta_t;
  std::map<GraphClass, bool> classes;
  std::map<std::string, bool> freeness;
  std::optional<LongestCycle> longest;
  std::optional<std::optional<CycleCert>> hamilton;
  std::map<std::pair<int, int>, UniversalCheck> every;
  std::map<std::pair<int, int>, std::optional<CycleCert>> exists;
  std::optional<bool> square;

  const DegreeProfile& profile() {
    if (!degrees) degrees = degree_profile(g);
    return *degrees;
  }
};

GraphContext::GraphContext(Graph g, int enumeration_ceiling) : impl_(std::make_unique<Impl>()) {
  impl_->g = std::move(g);
  impl_->ceiling = enumeration_ceiling;
}

GraphContext::~GraphContext() = default;

const Graph& GraphContext::graph() const { return impl_->g; }
int GraphContext::enumeration_ceiling() const { return impl_->ceiling; }

ExactNumber GraphContext::value(Symbol s, int index) {
  auto& m = *impl_;
  switch (s) {
    case Symbol::kN: return m.g.order();
    case Symbol::kQ: return m.g.size();
    case Symbol::kMinDegree: return m.profile().min_degree;
    case Symbol::kMaxDegree: return m.profile().max_degree;
    case Symbol::kKappa:
      if (!m.kappa) m.kappa = vertex_connectivity(m.g).size;
      return *m.kappa;
    case Symbol::kAlpha:
      if (!m.alpha) m.alpha = maximum_independent_set(m.g).size;
      return *m.alpha;
    case Symbol::kTau:
      if (!m.tau) m.tau = toughness(m.g).value;
      return *m.tau;
    case Symbol::kBinding:
      if (!m.binding) m.binding = binding_number(m.g).value;
      return *m.binding;
    case Symbol::kSigma: {
      auto it = m.sigma.find(index);
      if (it == m.sigma.end()) it = m.sigma.emplace(index, cyclekit::sigma(m.g, index)).first;
      return it->second;
    }
    case Symbol::kDeltaT: {
      auto it = m.delta_t.find(index);
      if (it == m.delta_t.end()) it = m.delta_t.emplace(index, delta_at_distance(m.g, index)).first;
      return it->second;
    }
    case Symbol::kC: return longest_cycle().length;
    case Symbol::kLambda:
    case Symbol::kPBar:
    case Symbol::kCBar: break;
  }
  throw ArithmeticError("symbol " + symbol_name(s, index) + " has no value here");
}

Truth GraphContext::in_class(GraphClass c) {
  auto& m = *impl_;
  auto cached = [&](GraphClass k, auto compute) {
    auto it = m.classes.find(k);
    if (it == m.classes.end()) it = m.classes.emplace(k, compute()).first;
    return it->second;
  };
  auto exact = [&](GraphClass k) -> bool {
    switch (k) {
      case GraphClass::kBipartite: return cached(k, [&] { return is_bipartite(m.g); });
      case GraphClass::kBalancedBipartite: return cached(k, [&] { return is_balanced_bipartite(m.g); });
      case GraphClass::kRegular: return cached(k, [&] { return is_regular(m.g); });
      case GraphClass::kChordal: return cached(k, [&] { return is_chordal(m.g); });
      case GraphClass::kSplit: return cached(k, [&] { return is_split(m.g); });
      case GraphClass::kPlanar: return cached(k, [&] { return is_planar(m.g); });
      default: return false;
    }
  };
  if (class_supported(c)) return exact(c) ? Truth::kTrue : Truth::kFalse;
  switch (c) {
    // Interval graphs are chordal; spiders are split.
    case GraphClass::kInterval: return exact(GraphClass::kChordal) ? Truth::kUnknown : Truth::kFalse;
    case GraphClass::kSpider: return exact(GraphClass::kSplit) ? Truth::kUnknown : Truth::kFalse;
    case GraphClass::kProjectivePlanar: return exact(GraphClass::kPlanar) ? Truth::kTrue : Truth::kUnknown;
    default: return Truth::kUnknown;
  }
}

bool GraphContext::is_free(const std::vector<PatternGraph>& patterns) {
  std::string key;
  for (const auto& p : patterns) key += p.name + ",";
  auto it = impl_->freeness.find(key);
  if (it == impl_->freeness.end()) it = impl_->freeness.emplace(key, cyclekit::is_free(impl_->g, patterns)).first;
  return it->second;
}

const LongestCycle& GraphContext::longest_cycle() {
  auto& m = *impl_;
  if (!m.longest) {
    if (m.hamilton && *m.hamilton) {
      m.longest = LongestCycle{m.g.order(), **m.hamilton};
    } else {
      m.longest = circumference(m.g);
    }
  }
  return *m.longest;
}

const std::optional<CycleCert>& GraphContext::hamilton_cycle() {
  auto& m = *impl_;
  if (!m.hamilton) {
    if (m.longest) {
      m.hamilton = m.longest->length == m.g.order() && m.g.order() > 0 ? std::optional(m.longest->cycle) : std::nullopt;
    } else {
      m.hamilton = hamiltonian(m.g);
    }
  }
  return *m.hamilton;
}

namespace {
std::pair<int, int> key_of(CycleCondition c) { return {static_cast<int>(c.kind), c.lambda}; }
}  // namespace

const UniversalCheck& GraphContext::every_longest(CycleCondition cond) {
  auto& m = *impl_;
  auto it = m.every.find(key_of(cond));
  if (it == m.every.end()) it = m.every.emplace(key_of(cond), every_longest_cycle_satisfies(m.g, cond, m.ceiling)).first;
  return it->second;
}

const std::optional<CycleCert>& GraphContext::exists_cycle(CycleCondition cond) {
  auto& m = *impl_;
  auto it = m.exists.find(key_of(cond));
  if (it == m.exists.end()) {
    std::optional<CycleCert> found;
    const auto& longest = longest_cycle();
    if (longest.length > 0 && satisfies(m.g, longest.cycle, cond)) {
      found = longest.cycle;
    } else {
      found = find_cycle_satisfying(m.g, cond, m.ceiling);
    }
    it = m.exists.emplace(key_of(cond), std::move(found)).first;
  }
  return it->second;
}

bool GraphContext::square_hamiltonian() {
  auto& m = *impl_;
  if (!m.square) m.square = m.g.order() == 0 ? false : hamiltonian(power(m.g, 2)).has_value();
  return *m.square;
}

namespace detail {

SymbolLookup lookup(GraphContext& ctx, std::optional<int> lambda) {
  return [&ctx, lambda](Symbol s, int index) -> ExactNumber {
    if (s == Symbol::kLambda) {
      if (!lambda) throw ArithmeticError("lambda is not bound");
      return *lambda;
    }
    return ctx.value(s, index);
  };
}

namespace {

int symbol_cost(const E& e) {
  int cost = 0;
  if (e.mentions(Symbol::kDeltaT)) cost = std::max(cost, 1);
  if (e.mentions(Symbol::kSigma) || e.mentions(Symbol::kKappa)) cost = std::max(cost, 2);
  if (e.mentions(Symbol::kAlpha)) cost = std::max(cost, 3);
  if (e.mentions(Symbol::kTau) || e.mentions(Symbol::kBinding)) cost = std::max(cost, 5);
  return cost;
}

bool compare(const ExactNumber& a, Relation r, const ExactNumber& b) {
  switch (r) {
    case Relation::kGe: return a >= b;
    case Relation::kGt: return a > b;
    case Relation::kLe: return a <= b;
    case Relation::kLt: return a < b;
  }
  return false;
}

std::string join_names(const std::vector<PatternGraph>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + ps[i].name;
  return s;
}

}  // namespace

int premise_cost(const Premise& p) {
  switch (p.kind) {
    case Premise::Kind::kRelation: return std::max(symbol_cost(p.lhs), symbol_cost(p.rhs));
    case Premise::Kind::kClass:
      switch (p.cls) {
        case GraphClass::kBipartite:
        case GraphClass::kBalancedBipartite:
        case GraphClass::kRegular: return 1;
        default: return 3;
      }
    case Premise::Kind::kFreeOfAll:
    case Premise::Kind::kFreeOfSome: return 4;
  }
  return 5;
}

PremiseEval evaluate_premise(GraphContext& ctx, const Premise& p, std::optional<int> lambda,
                             const std::set<GraphClass>& assume) {
  PremiseEval r;
  r.value.id = p.id;
  r.value.text = p.text();
  switch (p.kind) {
    case Premise::Kind::kRelation: {
      const auto values = lookup(ctx, lambda);
      const ExactNumber a = p.lhs.eval(values);
      const ExactNumber b = p.rhs.eval(values);
      r.value.truth = compare(a, p.rel, b) ? Truth::kTrue : Truth::kFalse;
      r.value.detail = a.to_string() + " " + relation_symbol(p.rel) + " " + b.to_string();
      break;
    }
    case Premise::Kind::kFreeOfAll: {
      const Graph& g = ctx.graph();
      r.value.truth = Truth::kTrue;
      r.value.detail = "free of " + join_names(p.patterns);
      for (const auto& pat : p.patterns) {
        if (!ctx.is_free({pat})) {
          r.value.truth = Truth::kFalse;
          const auto map = contains_induced(g, pat);
          std::string where;
          for (int v : *map) where += (where.empty() ? "" : " ") + std::to_string(v);
          r.value.detail = "induced " + pat.name + " on " + where;
          break;
        }
      }
      break;
    }
    case Premise::Kind::kFreeOfSome: {
      r.value.truth = Truth::kFalse;
      r.value.detail = "contains each of " + join_names(p.patterns);
      for (const auto& pat : p.patterns) {
        if (ctx.is_free({pat})) {
          r.value.truth = Truth::kTrue;
          r.value.detail = pat.name + "-free";
          break;
        }
      }
      break;
    }
    case Premise::Kind::kClass: {
      const Truth t = ctx.in_class(p.cls);
      r.value.truth = t;
      if (t == Truth::kUnknown) {
        if (assume.count(p.cls)) {
          r.value.truth = Truth::kTrue;
          r.assumed = true;
          r.value.detail = "asserted";
        } else {
          r.unsupported = true;
          r.value.detail = "not decidable here; assert with --assume " + class_name(p.cls);
        }
      } else {
        r.value.detail = t == Truth::kTrue ? "computed true" : "computed false";
      }
      break;
    }
  }
  return r;
}

std::pair<int, int> lambda_range(GraphContext& ctx, const LambdaDomain& d) {
  const auto values = lookup(ctx, std::nullopt);
  const ExactNumber lo = d.lo.eval(values).ceil();
  const ExactNumber hi = d.hi.eval(values).floor();
  return {static_cast<int>(lo.numerator()), static_cast<int>(hi.numerator())};
}

CycleCondition cycle_condition(const Conclusion& c, const SymbolLookup& values) {
  if (c.kind == Conclusion::Kind::kExistsDominating || c.kind == Conclusion::Kind::kEveryLongestDominating) {
    return {CycleProperty::kDominating, 0};
  }
  const ExactNumber v = c.param.eval(values);
  if (!v.is_integer()) throw ArithmeticError("CD parameter " + v.to_string() + " is not an integer");
  return {CycleProperty::kCD, static_cast<int>(std::max<std::int64_t>(1, v.numerator()))};
}

namespace {

int conclusion_cost(const Conclusion& c) {
  switch (c.kind) {
    case Conclusion::Kind::kIsomorphicTo: return 0;
    case Conclusion::Kind::kCircumference:
    case Conclusion::Kind::kHamiltonian: return 1;
    case Conclusion::Kind::kSquareHamiltonian: return 2;
    case Conclusion::Kind::kExistsDominating:
    case Conclusion::Kind::kExistsCD: return 3;
    default: return 4;
  }
}

SymbolLookup with_residual(const SymbolLookup& base, std::int64_t pbar, std::int64_t cbar) {
  return [base, pbar, cbar](Symbol s, int index) -> ExactNumber {
    if (s == Symbol::kPBar) return pbar;
    if (s == Symbol::kCBar) return cbar;
    return base(s, index);
  };
}

ConclusionEval residual(GraphContext& ctx, const Conclusion& c, const SymbolLookup& values) {
  ConclusionEval r;
  const Graph& g = ctx.graph();
  const auto& longest = ctx.longest_cycle();
  const int len = longest.length;
  const int rest = g.order() - len;
  // The bound only depends on the residual parameters, which lie in a
  // small box; if the box maximum is at most c no enumeration is needed.
  std::optional<ExactNumber> box;
  for (int p = -1; p <= std::max(-1, rest - 1); ++p) {
    for (int k = 0; k <= rest; ++k) {
      if (rest == 0 && (p != -1 || k != 0)) continue;
      const ExactNumber v = c.bound.eval(with_residual(values, p, k));
      if (!box || v > *box) box = v;
    }
  }
  if (*box <= ExactNumber(len)) {
    r.holds = true;
    r.witness = longest.cycle.to_string();
    r.detail = "c = " + std::to_string(len) + " >= " + box->to_string() + " (maximum over residual parameters)";
    r.slack = ExactNumber(len) - *box;
    return r;
  }
  auto bound_of = [&](VertexSet on_cycle) {
    const Residual res = residual_params(g, on_cycle);
    return c.bound.eval(with_residual(values, res.path_edges.value_or(-1), res.cycle_vertices.value_or(0)));
  };
  // Raise the worst bound seen until no longest cycle exceeds it.
  CycleCert worst_cycle = longest.cycle;
  ExactNumber worst_bound = bound_of(worst_cycle.vertex_set());
  while (worst_bound <= ExactNumber(len)) {
    const auto next = find_longest_cycle_on(
        g, [&](VertexSet on_cycle) { return bound_of(on_cycle) > worst_bound; }, ctx.enumeration_ceiling());
    if (!next) break;
    worst_cycle = *next;
    worst_bound = bound_of(next->vertex_set());
  }
  const Residual res = residual_params(g, worst_cycle);
  r.holds = worst_bound <= ExactNumber(len);
  const ExactNumber worst = ExactNumber(len) - worst_bound;
  const std::string worst_params = "pbar = " + std::to_string(res.path_edges.value_or(-1)) +
                                   ", cbar = " + std::to_string(res.cycle_vertices.value_or(0)) +
                                   ", bound = " + worst_bound.to_string();
  r.slack = worst;
  r.witness = worst_cycle.to_string();
  r.detail = "c = " + std::to_string(len) + ", tightest longest cycle has " + worst_params;
  return r;
}

}  // namespace

ConclusionEval evaluate_conclusion(GraphContext& ctx, const Conclusion& c, std::optional<int> lambda) {
  ConclusionEval r;
  const Graph& g = ctx.graph();
  const auto values = lookup(ctx, lambda);
  switch (c.kind) {
    case Conclusion::Kind::kHamiltonian: {
      const auto& h = ctx.hamilton_cycle();
      r.holds = h.has_value();
      r.witness = h ? h->to_string() : "";
      r.detail = h ? "Hamilton cycle" : "no Hamilton cycle (exhaustive search)";
      break;
    }
    case Conclusion::Kind::kExistsDominating:
    case Conclusion::Kind::kExistsCD: {
      const CycleCondition cond = cycle_condition(c, values);
      const auto& found = ctx.exists_cycle(cond);
      r.holds = found.has_value();
      r.witness = found ? found->to_string() : "";
      r.detail = found ? describe(cond) + " cycle" : "no " + describe(cond) + " cycle (exhaustive search)";
      break;
    }
    case Conclusion::Kind::kEveryLongestDominating:
    case Conclusion::Kind::kEveryLongestCD: {
      const CycleCondition cond = cycle_condition(c, values);
      const auto& u = ctx.every_longest(cond);
      r.holds = u.holds;
      if (u.holds) {
        r.witness = ctx.longest_cycle().cycle.to_string();
        r.detail = "every longest cycle is " + describe(cond) + " (c = " + std::to_string(u.circumference) + ", " +
                   std::to_string(u.cycles_checked) + " cycles checked)";
      } else {
        r.witness = u.counterexample->to_string();
        r.detail = "longest cycle " + r.witness + " is not " + describe(cond);
      }
      break;
    }
    case Conclusion::Kind::kCircumference: {
      const auto& longest = ctx.longest_cycle();
      const ExactNumber bound = c.bound.eval(values);
      const ExactNumber len = longest.length;
      r.holds = c.rel == Relation::kGe ? len >= bound : len > bound;
      r.witness = longest.cycle.to_string();
      r.detail = "c = " + len.to_string() + ", bound " + bound.to_string();
      if (!bound.is_infinite()) r.slack = len - bound;
      break;
    }
    case Conclusion::Kind::kResidual: return residual(ctx, c, values);
    case Conclusion::Kind::kSquareHamiltonian: {
      r.holds = ctx.square_hamiltonian();
      if (r.holds) {
        r.witness = hamiltonian(power(g, 2))->to_string();
        r.detail = "Hamilton cycle of the square";
      } else {
        r.detail = "square has no Hamilton cycle";
      }
      break;
    }
    case Conclusion::Kind::kIsomorphicTo: {
      const Graph& h = *c.graph;
      std::optional<std::vector<int>> map;
      if (h.order() == g.order() && h.size() == g.size()) map = find_induced(g, h);
      r.holds = map.has_value();
      if (map) {
        for (int v : *map) r.witness += (r.witness.empty() ? "" : " ") + std::to_string(v);
        r.detail = "G is the " + c.graph_name + " graph";
      } else {
        r.detail = "G is not the " + c.graph_name + " graph";
      }
      break;
    }
    case Conclusion::Kind::kDisjunction: {
      std::vector<std::size_t> order(c.alternatives.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return conclusion_cost(c.alternatives[a]) < conclusion_cost(c.alternatives[b]);
      });
      std::optional<CeilingExceeded> blocked;
      std::vector<std::string> failures;
      for (std::size_t i : order) {
        ConclusionEval alt;
        try {
          alt = evaluate_conclusion(ctx, c.alternatives[i], lambda);
        } catch (const CeilingExceeded& e) {
          blocked = e;
          continue;
        }
        if (alt.holds) {
          alt.detail = "alternative " + std::to_string(i + 1) + " holds: " + alt.detail;
          return alt;
        }
        failures.push_back("alternative " + std::to_string(i + 1) + " fails: " + alt.detail);
        if (!r.slack && alt.slack) r.slack = alt.slack;
      }
      if (blocked) throw *blocked;
      r.holds = false;
      for (const auto& f : failures) r.detail += (r.detail.empty() ? "" : "; ") + f;
      break;
    }
  }
  return r;
}

}  // namespace detail

namespace {

Verdict check_one(GraphContext& ctx, const TheoremSpec& thm, std::optional<int> lambda, const CheckOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.theorem = thm.id;
  v.lambda = lambda;
  auto finish = [&]() {
    v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
  };
  try {
    const int n = ctx.graph().order();
    PremiseValue floor_value{"n", "n >= " + std::to_string(thm.n_floor),
                             n >= thm.n_floor ? Truth::kTrue : Truth::kFalse,
                             std::to_string(n) + " >= " + std::to_string(thm.n_floor)};
    v.premises.push_back(floor_value);
    if (floor_value.truth == Truth::kFalse) {
      v.outcome = Outcome::kVacuous;
      v.detail = "premise n failed: " + floor_value.detail;
      return finish();
    }
    std::vector<const Premise*> order;
    for (const auto& p : thm.premises) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const Premise* a, const Premise* b) {
      return detail::premise_cost(*a) < detail::premise_cost(*b);
    });
    for (const Premise* p : order) {
      auto e = detail::evaluate_premise(ctx, *p, lambda, opts.assume);
      v.premises.push_back(e.value);
      if (e.assumed) v.assumed.push_back(class_name(p->cls));
      if (e.unsupported) v.unsupported.push_back(e.value.text);
      if (e.value.truth == Truth::kFalse) {
        v.outcome = Outcome::kVacuous;
        v.detail = "premise " + p->id + " failed: " + e.value.detail;
        return finish();
      }
    }
    if (!v.unsupported.empty()) {
      v.outcome = Outcome::kInapplicable;
      std::string list;
      for (const auto& u : v.unsupported) list += (list.empty() ? "" : ", ") + u;
      v.detail = "unsupported premise: " + list;
      return finish();
    }
    const auto c = detail::evaluate_conclusion(ctx, thm.conclusion, lambda);
    v.outcome = c.holds ? Outcome::kHolds : Outcome::kViolated;
    v.witness = c.witness;
    v.detail = c.detail;
    v.slack = c.slack;
  } catch (const CeilingExceeded& e) {
    v.outcome = Outcome::kCeiling;
    v.detail = e.what();
  } catch (const ArithmeticError& e) {
    v.outcome = Outcome::kError;
    v.detail = e.what();
  }
  return finish();
}

}  // namespace

std::vector<Verdict> check(GraphContext& ctx, const TheoremSpec& thm, const CheckOptions& options) {
  if (!thm.lambda) return {check_one(ctx, thm, std::nullopt, options)};
  std::optional<std::pair<int, int>> range;
  try {
    range = detail::lambda_range(ctx, *thm.lambda);
  } catch (const ArithmeticError& e) {
    Verdict v;
    v.theorem = thm.id;
    v.outcome = Outcome::kError;
    v.detail = e.what();
    return {v};
  }
  auto [lo, hi] = *range;
  if (options.lambda) {
    if (*options.lambda < lo || *options.lambda > hi) {
      Verdict v;
      v.theorem = thm.id;
      v.lambda = options.lambda;
      v.outcome = Outcome::kVacuous;
      v.premises.push_back({"lambda", thm.lambda->lo.to_string() + " <= lambda <= " + thm.lambda->hi.to_string(),
                            Truth::kFalse, std::to_string(lo) + " <= " + std::to_string(*options.lambda) +
                                               " <= " + std::to_string(hi)});
      v.detail = "lambda outside its domain";
      return {v};
    }
    return {check_one(ctx, thm, options.lambda, options)};
  }
  std::vector<Verdict> out;
  for (int l = lo; l <= hi; ++l) out.push_back(check_one(ctx, thm, l, options));
  if (out.empty()) {
    Verdict v;
    v.theorem = thm.id;
    v.outcome = Outcome::kVacuous;
    v.premises.push_back({"lambda", thm.lambda->lo.to_string() + " <= lambda <= " + thm.lambda->hi.to_string(),
                          Truth::kFalse, "empty range " + std::to_string(lo) + ".." + std::to_string(hi)});
    v.detail = "no admissible lambda";
    out.push_back(v);
  }
  return out;
}

std::vector<Verdict> check(const Graph& g, const TheoremSpec& thm, const CheckOptions& options) {
  GraphContext ctx(g, options.enumeration_ceiling);
  return check(ctx, thm, options);
}

Outcome overall(const std::vector<Verdict>& verdicts) {
  static const Outcome rank[] = {Outcome::kViolated, Outcome::kError, Outcome::kCeiling,
                                 Outcome::kHolds, Outcome::kInapplicable, Outcome::kVacuous};
  for (Outcome o : rank) {
    for (const auto& v : verdicts) {
      if (v.outcome == o) return o;
    }
  }
  return Outcome::kVacuous;
}

bool CheckAllReport::any_violated() const {
  auto it = counts.find(Outcome::kViolated);
  return it != counts.end() && it->second > 0;
}

CheckAllReport check_all(const Graph& g, const CheckOptions& options) {
  GraphContext ctx(g, options.enumeration_ceiling);
  CheckAllReport report;
  for (const auto& thm : catalog()) {
    EntryReport e;
    e.theorem = thm.id;
    e.verdicts = check(ctx, thm, options);
    e.outcome = overall(e.verdicts);
    ++report.counts[e.outcome];
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string transcript(const Graph& g, const Verdict& v) {
  std::ostringstream out;
  out << "graph6 " << encode_graph6(g) << "\n";
  out << "edges " << encode_edge_list(g);
  try {
    out << format_report_text(compute_report(g));
  } catch (const CeilingExceeded& e) {
    out << "invariants unavailable: " << e.what() << "\n";
  }
  out << "theorem " << v.theorem;
  if (v.lambda) out << " lambda=" << *v.lambda;
  out << "\nverdict " << outcome_name(v.outcome) << "\n";
  for (const auto& p : v.premises) {
    const char* t = p.truth == Truth::kTrue ? "true" : p.truth == Truth::kFalse ? "false" : "unknown";
    out << "premise " << p.id << " [" << p.text << "] " << t << " (" << p.detail << ")\n";
  }
  for (const auto& a : v.assumed) out << "assumed " << a << "\n";
  if (!v.witness.empty()) out << "witness " << v.witness << "\n";
  out << "detail " << v.detail << "\n";
  if (const auto* thm = find_theorem(v.theorem); thm && v.outcome == Outcome::kViolated) {
    // Exhaustive-search evidence for the failing conclusion.
    const auto longest = circumference(g);
    out << "search circumference " << longest.length << " via " << longest.cycle.to_string() << "\n";
    out << "search hamiltonian " << (hamiltonian_dp_oracle(g) ? "yes" : "no") << " (subset DP)\n";
  }
  return out.str();
}

std::string verdict_record(const std::string& graph6, const Verdict& v, bool timing) {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  j["theoremId"] = v.theorem;
  j["lambda"] = v.lambda ? nlohmann::ordered_json(*v.lambda) : nlohmann::ordered_json(nullptr);
  j["verdict"] = outcome_name(v.outcome);
  j["witness"] = v.witness;
  j["timing"] = timing ? nlohmann::ordered_json(v.millis) : nlohmann::ordered_json(nullptr);
  j["detail"] = v.detail;
  j["slack"] = v.slack ? nlohmann::ordered_json(v.slack->to_string()) : nlohmann::ordered_json(nullptr);
  auto premises = nlohmann::ordered_json::array();
  for (const auto& p : v.premises) {
    nlohmann::ordered_json pj;
    pj["id"] = p.id;
    pj["text"] = p.text;
    pj["truth"] = p.truth == Truth::kTrue ? "true" : p.truth == Truth::kFalse ? "false" : "unknown";
    pj["detail"] = p.detail;
    premises.push_back(pj);
  }
  j["premises"] = premises;
  j["assumed"] = v.assumed;
  j["unsupported"] = v.unsupported;
  return j.dump();
}

}  // namespace cyclekit
