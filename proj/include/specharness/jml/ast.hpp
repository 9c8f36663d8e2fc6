#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "specharness/bigint.hpp"

namespace specharness::jml {

// Byte range of a node within the text it was parsed from. Synthetic nodes
// carry {0, 0}.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

enum class UnaryOp { Not, Neg, BitNot };

enum class BinaryOp {
  Mul, Div, Mod,
  Add, Sub,
  Shl, Shr, Ushr,
  Lt, Le, Gt, Ge,
  Eq, Ne,
  BitAnd, BitXor, BitOr,
  And, Or,
  Implies,    // ==>
  ImpliedBy,  // <==
  Iff,        // <==>
};

enum class QuantKind { Forall, Exists };

// Bound-variable and cast target types. Only integral types participate.
enum class IntType { Int, Long, Char };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct BoolLit { bool value; };
  struct IntLit { BigInt value; };
  struct FloatLit { double value; };
  struct CharLit { std::uint16_t codePoint; };
  struct StrLit { std::string value; };
  struct NullLit {};
  struct Ident { std::string name; };
  struct ResultRef {};
  struct Old { ExprPtr inner; };
  struct Index { ExprPtr base; ExprPtr index; };
  struct Length { ExprPtr base; };  // base.length (arrays only)
  struct Unary { UnaryOp op; ExprPtr operand; };
  struct Binary { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
  struct Conditional { ExprPtr cond; ExprPtr thenBranch; ExprPtr elseBranch; };
  struct Quantified {
    QuantKind kind;
    IntType varType;
    std::string var;
    ExprPtr range;  // never null; omitted range parses as literal true
    ExprPtr body;
  };
  struct Cast { IntType target; ExprPtr operand; };

  using Node = std::variant<BoolLit, IntLit, FloatLit, CharLit, StrLit, NullLit,
                            Ident, ResultRef, Old, Index, Length, Unary, Binary,
                            Conditional, Quantified, Cast>;

  Node node;
  Span span;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
};

ExprPtr make_expr(Expr::Node node, Span span = {});

// Structural equality; spans are ignored.
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// True if the expression mentions \result anywhere.
bool mentions_result(const ExprPtr& e);

// Free identifiers (bound quantifier variables excluded), in first-seen order.
std::vector<std::string> free_identifiers(const ExprPtr& e);

const char* unary_op_text(UnaryOp op);
const char* binary_op_text(BinaryOp op);
const char* int_type_text(IntType t);

}  // namespace specharness::jml
