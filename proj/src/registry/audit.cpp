#include <algorithm>

#include "cyclekit/graph_io.hpp"
#include "internal.hpp"

namespace cyclekit {

int AuditReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const AuditCase& c) { return c.pass; }));
}

bool AuditReport::all_pass() const { return !cases.empty() && passed() == static_cast<int>(cases.size()); }

namespace {

using detail::ConclusionEval;
using detail::PremiseEval;

struct Evaluated {
  const Premise* premise;
  PremiseEval eval;
};

Premise relaxed(const Premise& p, const SharpnessExample& ex) {
  if (ex.replacement) return *ex.replacement;
  Premise r = p;
  switch (p.rel) {
    case Relation::kGe:
    case Relation::kGt: r.rhs = p.rhs - E(ex.epsilon); break;
    case Relation::kLe:
    case Relation::kLt: r.rhs = p.rhs + E(ex.epsilon); break;
  }
  return r;
}

/// Equality or the minimal excess in a circumference bound.
bool bound_met(GraphContext& ctx, const Conclusion& c, std::optional<int> lambda, std::string& how) {
  const auto values = detail::lookup(ctx, lambda);
  const ExactNumber len = ctx.longest_cycle().length;
  const Expr& b = c.bound.node();
  ExactNumber target;
  if (b.op() == Expr::Op::kMin && b.arg(0).is_symbol(Symbol::kN)) {
    target = b.arg(1).eval(values);
  } else {
    target = b.eval(values);
  }
  if (c.rel == Relation::kGt) target = target.floor() + 1;
  how = "c = " + len.to_string() + ", tight value " + target.to_string();
  return len == target;
}

bool residual_met(GraphContext& ctx, const Conclusion& c, std::optional<int> lambda, std::string& how) {
  const Graph& g = ctx.graph();
  const auto base = detail::lookup(ctx, lambda);
  const ExactNumber len = ctx.longest_cycle().length;
  auto bound_of = [&](const Residual& r) {
    return c.bound.eval([&](Symbol s, int i) -> ExactNumber {
      if (s == Symbol::kPBar) return r.path_edges.value_or(-1);
      if (s == Symbol::kCBar) return r.cycle_vertices.value_or(0);
      return base(s, i);
    });
  };
  const auto cycle = find_longest_cycle_on(
      g, [&](VertexSet s) { return bound_of(residual_params(g, s)) == len; }, ctx.enumeration_ceiling());
  const bool met = cycle.has_value();
  if (met) {
    const Residual r = residual_params(g, *cycle);
    how = "longest cycle " + cycle->to_string() + " has pbar = " + std::to_string(r.path_edges.value_or(-1)) +
          ", cbar = " + std::to_string(r.cycle_vertices.value_or(0)) + ", bound = " + bound_of(r).to_string() + " = c";
  }
  if (!met) how = "no longest cycle meets the bound with equality";
  return met;
}

bool default_stronger(Conclusion::Kind k) {
  switch (k) {
    case Conclusion::Kind::kExistsDominating:
    case Conclusion::Kind::kEveryLongestDominating:
    case Conclusion::Kind::kExistsCD:
    case Conclusion::Kind::kEveryLongestCD:
    case Conclusion::Kind::kSquareHamiltonian: return true;
    default: return false;
  }
}

/// Conclusion holds and cannot be improved on this graph.
bool conclusion_tight(GraphContext& ctx, const Conclusion& c, const std::optional<Conclusion>& stronger,
                      std::optional<int> lambda, std::string& how) {
  const ConclusionEval holds = detail::evaluate_conclusion(ctx, c, lambda);
  if (!holds.holds) {
    how = "conclusion fails: " + holds.detail;
    return false;
  }
  if (c.kind == Conclusion::Kind::kDisjunction) {
    bool all = true;
    std::string parts;
    for (const auto& alt : c.alternatives) {
      const auto e = detail::evaluate_conclusion(ctx, alt, lambda);
      if (!e.holds) continue;
      std::string sub;
      const bool t = conclusion_tight(ctx, alt, std::nullopt, lambda, sub);
      parts += (parts.empty() ? "" : "; ") + alt.text() + ": " + sub;
      all = all && t;
    }
    how = parts;
    return all;
  }
  if (c.kind == Conclusion::Kind::kCircumference && bound_met(ctx, c, lambda, how)) return true;
  if (c.kind == Conclusion::Kind::kResidual && residual_met(ctx, c, lambda, how)) return true;
  std::optional<Conclusion> s = stronger;
  if (!s && default_stronger(c.kind)) s = hamiltonian_conclusion();
  if (s) {
    const auto e = detail::evaluate_conclusion(ctx, *s, lambda);
    const std::string prefix = how.empty() ? "" : how + "; ";
    how = prefix + "stronger conclusion '" + s->text() + "' " + (e.holds ? "holds" : "fails");
    return !e.holds;
  }
  if (how.empty()) how = "no tightness criterion for " + c.text();
  return false;
}

std::string premise_list(const std::vector<Evaluated>& ps) {
  std::string s;
  for (const auto& e : ps) {
    s += (s.empty() ? "" : ", ") + e.eval.value.id + ": " + e.eval.value.detail;
  }
  return s;
}

void evaluate_case(const TheoremSpec& thm, const SharpnessExample& ex, AuditCase& out, const Graph& g,
                   const AuditOptions& opts) {
  GraphContext ctx(g, opts.enumeration_ceiling);
  const std::optional<int> lambda = out.lambda;
  const std::set<GraphClass> assume(ex.assume.begin(), ex.assume.end());

  std::vector<Premise> premises;
  auto floor = relation("n", sym::n, Relation::kGe, thm.n_floor);
  floor.implicit = true;
  premises.push_back(floor);
  for (const auto& p : thm.premises) premises.push_back(p);

  std::vector<Evaluated> values;
  std::vector<const Evaluated*> failed;
  std::vector<const Evaluated*> unknown;
  for (const auto& p : premises) values.push_back({&p, detail::evaluate_premise(ctx, p, lambda, assume)});
  for (const auto& e : values) {
    if (e.eval.value.truth == Truth::kFalse) failed.push_back(&e);
    if (e.eval.unsupported) unknown.push_back(&e);
  }
  const std::string summary = premise_list(values);
  if (!unknown.empty()) {
    out.observed = "inapplicable";
    out.detail = "premise " + unknown.front()->eval.value.id + " is not decidable and not asserted; " + summary;
    return;
  }

  const ConclusionEval concl = detail::evaluate_conclusion(ctx, thm.conclusion, lambda);

  std::vector<std::string> roles;
  std::string tight_detail;
  if (failed.empty()) {
    if (!concl.holds) {
      out.observed = "VIOLATED";
      out.detail = "all premises hold but " + concl.detail;
      return;
    }
    if (conclusion_tight(ctx, thm.conclusion, ex.stronger, lambda, tight_detail)) roles.push_back("conclusion-tight");
  } else if (failed.size() == 1 && !concl.holds) {
    const Evaluated& f = *failed.front();
    roles.push_back("premise-necessary(" + f.premise->id + ")");
    bool relax_holds = true;
    if (f.premise->kind == Premise::Kind::kRelation || ex.replacement) {
      const Premise r = relaxed(*f.premise, ex);
      const auto e = detail::evaluate_premise(ctx, r, lambda, assume);
      relax_holds = e.value.truth == Truth::kTrue;
      tight_detail = "relaxed " + r.text() + ": " + e.value.detail + (relax_holds ? " holds" : " fails");
    }
    if (relax_holds) roles.insert(roles.begin(), "premise-tight(" + f.premise->id + ")");
  }

  std::string observed;
  for (const auto& r : roles) observed += (observed.empty() ? "" : ", ") + r;
  if (observed.empty()) {
    if (!failed.empty()) {
      std::string ids;
      for (const auto* f : failed) ids += (ids.empty() ? "" : ",") + f->premise->id;
      observed = "premises {" + ids + "} fail, conclusion " + (concl.holds ? "holds" : "fails");
    } else {
      observed = "premises hold, conclusion holds, not tight";
    }
  }
  out.observed = observed;

  auto has = [&](const std::string& r) { return std::find(roles.begin(), roles.end(), r) != roles.end(); };
  switch (ex.role) {
    case Role::kPremiseTight: out.pass = has("premise-tight(" + ex.premise + ")"); break;
    case Role::kPremiseNecessary: out.pass = has("premise-necessary(" + ex.premise + ")"); break;
    case Role::kConclusionTight: out.pass = has("conclusion-tight"); break;
    case Role::kAny: out.pass = !roles.empty(); break;
  }
  out.detail = summary + "; conclusion " + (concl.holds ? "holds" : "fails") + ": " + concl.detail;
  if (!concl.witness.empty()) out.detail += " [" + concl.witness + "]";
  if (!tight_detail.empty()) out.detail += "; " + tight_detail;
}

}  // namespace

AuditReport audit_sharpness(const TheoremSpec& thm, const AuditOptions& options) {
  AuditReport report;
  report.theorem = thm.id;
  for (const auto& ex : thm.sharpness) {
    std::vector<int> values;
    if (ex.parameter.empty()) {
      values.push_back(0);
    } else {
      const int lo = options.range ? options.range->first : ex.lo;
      const int hi = options.range ? options.range->second : ex.hi;
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    }
    for (int v : values) {
      for (const auto& inst : ex.instances(v)) {
        AuditCase c;
        c.example = ex.label;
        if (!ex.parameter.empty()) c.example += " [" + ex.parameter + "=" + std::to_string(v) + "]";
        c.spec = inst.spec.to_string();
        c.lambda = inst.lambda;
        c.expected = ex.role;
        c.premise = ex.premise;
        try {
          const Graph g = build(inst.spec);
          c.graph6 = encode_graph6(g);
          if (thm.lambda && !c.lambda) throw std::invalid_argument("example does not fix lambda");
          evaluate_case(thm, ex, c, g, options);
        } catch (const CeilingExceeded& e) {
          c.observed = "ceiling";
          c.detail = e.what();
        } catch (const std::exception& e) {
          c.observed = "error";
          c.detail = e.what();
        }
        if (!ex.note.empty()) c.detail += " (" + ex.note + ")";
        report.cases.push_back(std::move(c));
      }
    }
  }
  return report;
}

}  // namespace cyclekit
