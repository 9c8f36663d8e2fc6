#include "specharness/jml/ast.hpp"

#include <algorithm>

namespace specharness::jml {

ExprPtr make_expr(Expr::Node node, Span span) {
  auto e = std::make_shared<Expr>();
  e->node = std::move(node);
  e->span = span;
  return e;
}

namespace {

bool node_equal(const Expr::Node& a, const Expr::Node& b);

bool ptr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return node_equal(a->node, b->node);
}

struct EqVisitor {
  const Expr::Node& other;

  bool operator()(const Expr::BoolLit& x) const {
    auto* y = std::get_if<Expr::BoolLit>(&other);
    return y && x.value == y->value;
  }
  bool operator()(const Expr::IntLit& x) const {
    auto* y = std::get_if<Expr::IntLit>(&other);
    return y && x.value == y->value;
  }
  bool operator()(const Expr::FloatLit& x) const {
    auto* y = std::get_if<Expr::FloatLit>(&other);
    // Bit-level comparison so that printing round-trips NaN-free exactness.
    return y && std::bit_cast<std::uint64_t>(x.value) ==
                    std::bit_cast<std::uint64_t>(y->value);
  }
  bool operator()(const Expr::CharLit& x) const {
    auto* y = std::get_if<Expr::CharLit>(&other);
    return y && x.codePoint == y->codePoint;
  }
  bool operator()(const Expr::StrLit& x) const {
    auto* y = std::get_if<Expr::StrLit>(&other);
    return y && x.value == y->value;
  }
  bool operator()(const Expr::NullLit&) const {
    return std::holds_alternative<Expr::NullLit>(other);
  }
  bool operator()(const Expr::Ident& x) const {
    auto* y = std::get_if<Expr::Ident>(&other);
    return y && x.name == y->name;
  }
  bool operator()(const Expr::ResultRef&) const {
    return std::holds_alternative<Expr::ResultRef>(other);
  }
  bool operator()(const Expr::Old& x) const {
    auto* y = std::get_if<Expr::Old>(&other);
    return y && ptr_equal(x.inner, y->inner);
  }
  bool operator()(const Expr::Index& x) const {
    auto* y = std::get_if<Expr::Index>(&other);
    return y && ptr_equal(x.base, y->base) && ptr_equal(x.index, y->index);
  }
  bool operator()(const Expr::Length& x) const {
    auto* y = std::get_if<Expr::Length>(&other);
    return y && ptr_equal(x.base, y->base);
  }
  bool operator()(const Expr::Unary& x) const {
    auto* y = std::get_if<Expr::Unary>(&other);
    return y && x.op == y->op && ptr_equal(x.operand, y->operand);
  }
  bool operator()(const Expr::Binary& x) const {
    auto* y = std::get_if<Expr::Binary>(&other);
    return y && x.op == y->op && ptr_equal(x.lhs, y->lhs) && ptr_equal(x.rhs, y->rhs);
  }
  bool operator()(const Expr::Conditional& x) const {
    auto* y = std::get_if<Expr::Conditional>(&other);
    return y && ptr_equal(x.cond, y->cond) && ptr_equal(x.thenBranch, y->thenBranch) &&
           ptr_equal(x.elseBranch, y->elseBranch);
  }
  bool operator()(const Expr::Quantified& x) const {
    auto* y = std::get_if<Expr::Quantified>(&other);
    return y && x.kind == y->kind && x.varType == y->varType && x.var == y->var &&
           ptr_equal(x.range, y->range) && ptr_equal(x.body, y->body);
  }
  bool operator()(const Expr::Cast& x) const {
    auto* y = std::get_if<Expr::Cast>(&other);
    return y && x.target == y->target && ptr_equal(x.operand, y->operand);
  }
};

bool node_equal(const Expr::Node& a, const Expr::Node& b) {
  return std::visit(EqVisitor{b}, a);
}

void walk(const ExprPtr& e, std::vector<std::string>& scope,
          std::vector<std::string>& out, bool& resultSeen) {
  if (!e) return;
  if (auto* id = e->as<Expr::Ident>()) {
    if (std::find(scope.begin(), scope.end(), id->name) == scope.end() &&
        std::find(out.begin(), out.end(), id->name) == out.end()) {
      out.push_back(id->name);
    }
  } else if (e->as<Expr::ResultRef>()) {
    resultSeen = true;
  } else if (auto* old = e->as<Expr::Old>()) {
    walk(old->inner, scope, out, resultSeen);
  } else if (auto* ix = e->as<Expr::Index>()) {
    walk(ix->base, scope, out, resultSeen);
    walk(ix->index, scope, out, resultSeen);
  } else if (auto* len = e->as<Expr::Length>()) {
    walk(len->base, scope, out, resultSeen);
  } else if (auto* u = e->as<Expr::Unary>()) {
    walk(u->operand, scope, out, resultSeen);
  } else if (auto* b = e->as<Expr::Binary>()) {
    walk(b->lhs, scope, out, resultSeen);
    walk(b->rhs, scope, out, resultSeen);
  } else if (auto* c = e->as<Expr::Conditional>()) {
    walk(c->cond, scope, out, resultSeen);
    walk(c->thenBranch, scope, out, resultSeen);
    walk(c->elseBranch, scope, out, resultSeen);
  } else if (auto* q = e->as<Expr::Quantified>()) {
    scope.push_back(q->var);
    walk(q->range, scope, out, resultSeen);
    walk(q->body, scope, out, resultSeen);
    scope.pop_back();
  } else if (auto* cast = e->as<Expr::Cast>()) {
    walk(cast->operand, scope, out, resultSeen);
  }
}

}  // namespace

bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return ptr_equal(a, b); }

bool mentions_result(const ExprPtr& e) {
  std::vector<std::string> scope;
  std::vector<std::string> ids;
  bool resultSeen = false;
  walk(e, scope, ids, resultSeen);
  return resultSeen;
}

std::vector<std::string> free_identifiers(const ExprPtr& e) {
  std::vector<std::string> scope;
  std::vector<std::string> ids;
  bool resultSeen = false;
  walk(e, scope, ids, resultSeen);
  return ids;
}

const char* unary_op_text(UnaryOp op) {
  switch (op) {
    case UnaryOp::Not: return "!";
    case UnaryOp::Neg: return "-";
    case UnaryOp::BitNot: return "~";
  }
  return "?";
}

const char* binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::Ushr: return ">>>";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    case BinaryOp::Implies: return "==>";
    case BinaryOp::ImpliedBy: return "<==";
    case BinaryOp::Iff: return "<==>";
  }
  return "?";
}

const char* int_type_text(IntType t) {
  switch (t) {
    case IntType::Int: return "int";
    case IntType::Long: return "long";
    case IntType::Char: return "char";
  }
  return "?";
}

}  // namespace specharness::jml
