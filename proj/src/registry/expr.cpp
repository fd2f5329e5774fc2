#include "cyclekit/expr.hpp"

namespace cyclekit {

std::string symbol_name(Symbol s, int index) {
  switch (s) {
    case Symbol::kN: return "n";
    case Symbol::kQ: return "q";
    case Symbol::kMinDegree: return "delta";
    case Symbol::kMaxDegree: return "Delta";
    case Symbol::kKappa: return "kappa";
    case Symbol::kAlpha: return "alpha";
    case Symbol::kTau: return "tau";
    case Symbol::kBinding: return "b";
    case Symbol::kSigma: return "sigma_" + std::to_string(index);
    case Symbol::kDeltaT: return "delta_" + std::to_string(index);
    case Symbol::kLambda: return "lambda";
    case Symbol::kPBar: return "pbar";
    case Symbol::kCBar: return "cbar";
    case Symbol::kC: return "c";
  }
  return "?";
}

namespace {

ExactNumber binomial(const ExactNumber& a, const ExactNumber& b) {
  if (!a.is_integer() || !b.is_integer()) throw ArithmeticError("binom needs integer arguments");
  const std::int64_t n = a.numerator();
  const std::int64_t k = b.numerator();
  if (k < 0 || n < k) return 0;
  ExactNumber r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * ExactNumber(n - i, i + 1);
  return r;
}

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::kAdd:
    case Expr::Op::kSub: return 1;
    case Expr::Op::kMul:
    case Expr::Op::kDiv: return 2;
    default: return 3;
  }
}

}  // namespace

ExactNumber Expr::eval(const SymbolLookup& lookup) const {
  auto arg = [&](std::size_t i) { return args_[i]->eval(lookup); };
  switch (op_) {
    case Op::kConst: return value_;
    case Op::kSym: return lookup(sym_, index_);
    case Op::kAdd: return arg(0) + arg(1);
    case Op::kSub: return arg(0) - arg(1);
    case Op::kMul: return arg(0) * arg(1);
    case Op::kDiv: return arg(0) / arg(1);
    case Op::kMin: return min(arg(0), arg(1));
    case Op::kMax: return max(arg(0), arg(1));
    case Op::kFloor: return arg(0).floor();
    case Op::kCeil: return arg(0).ceil();
    case Op::kBinom: return binomial(arg(0), arg(1));
    case Op::kIfGe: return arg(0) >= arg(1) ? arg(2) : arg(3);
  }
  return 0;
}

std::string Expr::to_string() const {
  auto wrap = [&](std::size_t i, bool right) {
    const auto& a = *args_[i];
    const int pa = precedence(a.op_);
    const int p = precedence(op_);
    const bool needs = pa < p || (right && pa == p && (op_ == Op::kSub || op_ == Op::kDiv));
    return needs ? "(" + a.to_string() + ")" : a.to_string();
  };
  switch (op_) {
    case Op::kConst: return value_.to_string();
    case Op::kSym: return symbol_name(sym_, index_);
    case Op::kAdd: return wrap(0, false) + " + " + wrap(1, true);
    case Op::kSub: return wrap(0, false) + " - " + wrap(1, true);
    case Op::kMul: return wrap(0, false) + "*" + wrap(1, true);
    case Op::kDiv: return wrap(0, false) + "/" + wrap(1, true);
    case Op::kMin: return "min{" + args_[0]->to_string() + ", " + args_[1]->to_string() + "}";
    case Op::kMax: return "max{" + args_[0]->to_string() + ", " + args_[1]->to_string() + "}";
    case Op::kFloor: return "floor(" + args_[0]->to_string() + ")";
    case Op::kCeil: return "ceil(" + args_[0]->to_string() + ")";
    case Op::kBinom: return "binom(" + args_[0]->to_string() + ", " + args_[1]->to_string() + ")";
    case Op::kIfGe:
      return "(" + args_[2]->to_string() + " if " + args_[0]->to_string() + " >= " + args_[1]->to_string() +
             " else " + args_[3]->to_string() + ")";
  }
  return "?";
}

bool Expr::mentions(Symbol s) const {
  if (op_ == Op::kSym) return sym_ == s;
  for (const auto& a : args_) {
    if (a->mentions(s)) return true;
  }
  return false;
}

E::E(int v) : E(ExactNumber(v)) {}

E::E(ExactNumber v) {
  auto node = std::make_shared<Expr>();
  node->op_ = Expr::Op::kConst;
  node->value_ = v;
  node_ = std::move(node);
}

E E::sym(Symbol s, int index) {
  auto node = std::make_shared<Expr>();
  node->op_ = Expr::Op::kSym;
  node->sym_ = s;
  node->index_ = index;
  return E(std::shared_ptr<const Expr>(std::move(node)));
}

E E::make(Expr::Op op, std::vector<E> args) {
  auto node = std::make_shared<Expr>();
  node->op_ = op;
  for (auto& a : args) node->args_.push_back(a.node_);
  return E(std::shared_ptr<const Expr>(std::move(node)));
}

E operator+(const E& a, const E& b) { return E::make(Expr::Op::kAdd, {a, b}); }
E operator-(const E& a, const E& b) { return E::make(Expr::Op::kSub, {a, b}); }
E operator*(const E& a, const E& b) { return E::make(Expr::Op::kMul, {a, b}); }
E operator/(const E& a, const E& b) { return E::make(Expr::Op::kDiv, {a, b}); }
E min(const E& a, const E& b) { return E::make(Expr::Op::kMin, {a, b}); }
E max(const E& a, const E& b) { return E::make(Expr::Op::kMax, {a, b}); }
E floor(const E& a) { return E::make(Expr::Op::kFloor, {a}); }
E ceil(const E& a) { return E::make(Expr::Op::kCeil, {a}); }
E binom(const E& a, const E& b) { return E::make(Expr::Op::kBinom, {a, b}); }
E if_ge(const E& a, const E& b, const E& then, const E& otherwise) {
  return E::make(Expr::Op::kIfGe, {a, b, then, otherwise});
}

}  // namespace cyclekit
