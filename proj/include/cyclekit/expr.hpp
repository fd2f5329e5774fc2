#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cyclekit/exact_number.hpp"

namespace cyclekit {

/// Invariant symbols an expression may reference. Sigma and DeltaT carry an
/// index t.
enum class Symbol { kN, kQ, kMinDegree, kMaxDegree, kKappa, kAlpha, kTau, kBinding, kSigma, kDeltaT, kLambda, kPBar, kCBar, kC };

std::string symbol_name(Symbol s, int index = 0);

/// Supplies symbol values during evaluation.
using SymbolLookup = std::function<ExactNumber(Symbol, int)>;

class Expr {
 public:
  enum class Op { kConst, kSym, kAdd, kSub, kMul, kDiv, kMin, kMax, kFloor, kCeil, kBinom, kIfGe };

  /// Exact evaluation; kIfGe(a, b, x, y) is x when a >= b and y otherwise.
  ExactNumber eval(const SymbolLookup& lookup) const;
  std::string to_string() const;
  /// True if the symbol occurs anywhere in the tree.
  bool mentions(Symbol s) const;

  Op op() const { return op_; }
  std::size_t arity() const { return args_.size(); }
  const Expr& arg(std::size_t i) const { return *args_.at(i); }
  bool is_symbol(Symbol s) const { return op_ == Op::kSym && sym_ == s; }

 private:
  friend class E;
  Op op_ = Op::kConst;
  ExactNumber value_;
  Symbol sym_ = Symbol::kN;
  int index_ = 0;
  std::vector<std::shared_ptr<const Expr>> args_;
};

/// Value-semantic handle used to write catalog formulas.
class E {
 public:
  E(int v);  // NOLINT(google-explicit-constructor): lets formulas mix literals
  E(ExactNumber v);  // NOLINT(google-explicit-constructor)
  static E sym(Symbol s, int index = 0);
  static E frac(std::int64_t num, std::int64_t den) { return E(ExactNumber(num, den)); }

  ExactNumber eval(const SymbolLookup& lookup) const { return node_->eval(lookup); }
  std::string to_string() const { return node_->to_string(); }
  bool mentions(Symbol s) const { return node_->mentions(s); }
  const Expr& node() const { return *node_; }

  friend E operator+(const E& a, const E& b);
  friend E operator-(const E& a, const E& b);
  friend E operator*(const E& a, const E& b);
  friend E operator/(const E& a, const E& b);
  friend E min(const E& a, const E& b);
  friend E max(const E& a, const E& b);
  friend E floor(const E& a);
  friend E ceil(const E& a);
  friend E binom(const E& a, const E& b);
  friend E if_ge(const E& a, const E& b, const E& then, const E& otherwise);

 private:
  explicit E(std::shared_ptr<const Expr> node) : node_(std::move(node)) {}
  static E make(Expr::Op op, std::vector<E> args);
  std::shared_ptr<const Expr> node_;
};

namespace sym {
inline const E n = E::sym(Symbol::kN);
inline const E q = E::sym(Symbol::kQ);
inline const E delta = E::sym(Symbol::kMinDegree);
inline const E Delta = E::sym(Symbol::kMaxDegree);
inline const E kappa = E::sym(Symbol::kKappa);
inline const E alpha = E::sym(Symbol::kAlpha);
inline const E tau = E::sym(Symbol::kTau);
inline const E b = E::sym(Symbol::kBinding);
inline const E lambda = E::sym(Symbol::kLambda);
inline const E pbar = E::sym(Symbol::kPBar);
inline const E cbar = E::sym(Symbol::kCBar);
inline const E c = E::sym(Symbol::kC);
inline E sigma(int t) { return E::sym(Symbol::kSigma, t); }
inline E delta_t(int t) { return E::sym(Symbol::kDeltaT, t); }
}  // namespace sym

}  // namespace cyclekit
