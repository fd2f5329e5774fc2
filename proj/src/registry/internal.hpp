#pragma once

#include <optional>
#include <set>
#include <string>

#include "cyclekit/registry.hpp"

namespace cyclekit::detail {

/// Symbol values of the context's graph, with lambda bound when given.
SymbolLookup lookup(GraphContext& ctx, std::optional<int> lambda);

struct PremiseEval {
  PremiseValue value;
  bool assumed = false;      // true only because of an assertion
  bool unsupported = false;  // unknown and not asserted
};

PremiseEval evaluate_premise(GraphContext& ctx, const Premise& p, std::optional<int> lambda,
                             const std::set<GraphClass>& assume);

/// Evaluation cost rank used to order premises (cheap first).
int premise_cost(const Premise& p);

struct ConclusionEval {
  bool holds = false;
  std::string witness;
  std::string detail;
  std::optional<ExactNumber> slack;
};

/// Throws CeilingExceeded or ArithmeticError.
ConclusionEval evaluate_conclusion(GraphContext& ctx, const Conclusion& c, std::optional<int> lambda);

/// Integer domain of lambda on this graph; empty when lo > hi.
std::pair<int, int> lambda_range(GraphContext& ctx, const LambdaDomain& d);

/// Condition for a CD_lambda or dominating conclusion; lambda <= 1 reads as CD_1.
CycleCondition cycle_condition(const Conclusion& c, const SymbolLookup& values);

}  // namespace cyclekit::detail
