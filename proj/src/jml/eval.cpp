#include "specharness/jml/eval.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <variant>
#include <vector>

namespace specharness::jml {

using testkit::TypeTag;
using testkit::Value;

namespace {

struct NullV {};
using ArrayV = std::shared_ptr<const std::vector<struct RtVal>>;

// Runtime value domain. Chars fold into the integer domain at conversion:
// comparisons and arithmetic see the code point.
struct RtVal {
  std::variant<bool, BigInt, double, std::string, NullV, ArrayV> v;

  bool is_bool() const { return v.index() == 0; }
  bool is_int() const { return v.index() == 1; }
  bool is_float() const { return v.index() == 2; }
  bool is_str() const { return v.index() == 3; }
  bool is_null() const { return v.index() == 4; }
  bool is_array() const { return v.index() == 5; }
};

struct Fault {
  EvalErrorReason reason;
  Span span;
  std::string detail;
};

[[noreturn]] void fault(EvalErrorReason reason, const ExprPtr& at, std::string detail) {
  throw Fault{reason, at ? at->span : Span{}, std::move(detail)};
}

const char* rt_type_name(const RtVal& v) {
  switch (v.v.index()) {
    case 0: return "boolean";
    case 1: return "integer";
    case 2: return "double";
    case 3: return "string";
    case 4: return "null";
    default: return "array";
  }
}

RtVal from_value(const Value& val) {
  switch (val.tag()) {
    case TypeTag::Bool: return {val.as_bool()};
    case TypeTag::Char: return {BigInt(val.as_char())};
    case TypeTag::Int32: return {BigInt(val.as_int32())};
    case TypeTag::Int64: return {BigInt(val.as_int64())};
    case TypeTag::Float64: return {val.as_float64()};
    case TypeTag::Str: return {val.as_str()};
    case TypeTag::NullRef: return {NullV{}};
    case TypeTag::Array: {
      auto elems = std::make_shared<std::vector<RtVal>>();
      for (const auto& e : val.as_array().elems) {
        elems->push_back(from_value(e));
      }
      return {ArrayV(std::move(elems))};
    }
  }
  return {NullV{}};
}

BigInt wrap_to(const BigInt& v, unsigned bits) {
  BigInt modulus = BigInt(1) << bits;
  BigInt r = v % modulus;
  if (r < 0) r += modulus;
  if (r >= (BigInt(1) << (bits - 1))) r -= modulus;
  return r;
}

class Evaluator {
 public:
  Evaluator(const Env& env, const EvalOptions& opts)
      : env_(env), opts_(opts), budget_(opts.quantifierBudget) {}

  RtVal eval(const ExprPtr& e) {
    const Expr& x = *e;
    if (auto* b = x.as<Expr::BoolLit>()) return {b->value};
    if (auto* i = x.as<Expr::IntLit>()) return {i->value};
    if (auto* f = x.as<Expr::FloatLit>()) return {f->value};
    if (auto* c = x.as<Expr::CharLit>()) return {BigInt(c->codePoint)};
    if (auto* s = x.as<Expr::StrLit>()) return {s->value};
    if (x.as<Expr::NullLit>()) return {NullV{}};
    if (auto* id = x.as<Expr::Ident>()) return lookup(id->name, e);
    if (x.as<Expr::ResultRef>()) {
      if (!env_.resultValue) {
        fault(EvalErrorReason::TypeMismatch, e, "\\result is not bound here");
      }
      return from_value(*env_.resultValue);
    }
    if (auto* old = x.as<Expr::Old>()) {
      bool saved = inOld_;
      inOld_ = true;
      RtVal r = eval(old->inner);
      inOld_ = saved;
      return r;
    }
    if (auto* ix = x.as<Expr::Index>()) return eval_index(*ix, e);
    if (auto* len = x.as<Expr::Length>()) return eval_length(*len, e);
    if (auto* u = x.as<Expr::Unary>()) return eval_unary(*u, e);
    if (auto* b = x.as<Expr::Binary>()) return eval_binary(*b, e);
    if (auto* c = x.as<Expr::Conditional>()) {
      RtVal cond = eval(c->cond);
      require_bool(cond, c->cond);
      return eval(std::get<bool>(cond.v) ? c->thenBranch : c->elseBranch);
    }
    if (auto* q = x.as<Expr::Quantified>()) return eval_quantified(*q, e);
    if (auto* cast = x.as<Expr::Cast>()) return eval_cast(*cast, e);
    fault(EvalErrorReason::UnsupportedConstruct, e, "unknown node");
  }

 private:
  RtVal lookup(const std::string& name, const ExprPtr& at) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) {
        return {it->second};
      }
    }
    const auto& map = inOld_ ? env_.oldBindings : env_.bindings;
    auto it = map.find(name);
    if (it == map.end()) {
      fault(EvalErrorReason::TypeMismatch, at,
            "unbound identifier '" + name + "'" + (inOld_ ? " in \\old" : ""));
    }
    return from_value(it->second);
  }

  void require_bool(const RtVal& v, const ExprPtr& at) {
    if (!v.is_bool()) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string("expected boolean, got ") + rt_type_name(v));
    }
  }

  BigInt require_int(const RtVal& v, const ExprPtr& at, const char* what) {
    if (!v.is_int()) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string(what) + " must be integral, got " + rt_type_name(v));
    }
    return std::get<BigInt>(v.v);
  }

  RtVal eval_index(const Expr::Index& ix, const ExprPtr& at) {
    RtVal base = eval(ix.base);
    if (base.is_null()) {
      fault(EvalErrorReason::NullDereference, at, "indexing a null array");
    }
    if (!base.is_array()) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string("indexing a non-array value (") + rt_type_name(base) + ")");
    }
    RtVal idx = eval(ix.index);
    BigInt i = require_int(idx, ix.index, "array index");
    const auto& elems = *std::get<ArrayV>(base.v);
    if (i < 0 || i >= BigInt(elems.size())) {
      fault(EvalErrorReason::IndexOutOfBounds, at,
            "index " + i.str() + " out of bounds for length " +
                std::to_string(elems.size()));
    }
    return elems[static_cast<std::size_t>(i)];
  }

  RtVal eval_length(const Expr::Length& len, const ExprPtr& at) {
    RtVal base = eval(len.base);
    if (base.is_null()) {
      fault(EvalErrorReason::NullDereference, at, ".length on a null array");
    }
    if (!base.is_array()) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string(".length on a non-array value (") + rt_type_name(base) + ")");
    }
    return {BigInt(std::get<ArrayV>(base.v)->size())};
  }

  RtVal eval_unary(const Expr::Unary& u, const ExprPtr& at) {
    RtVal v = eval(u.operand);
    switch (u.op) {
      case UnaryOp::Not:
        require_bool(v, u.operand);
        return {!std::get<bool>(v.v)};
      case UnaryOp::Neg:
        if (v.is_float()) return {-std::get<double>(v.v)};
        return {wrap(-require_int(v, u.operand, "operand of unary '-'"))};
      case UnaryOp::BitNot: {
        BigInt i = require_int(v, u.operand, "operand of '~'");
        return {wrap(-i - 1)};
      }
    }
    fault(EvalErrorReason::UnsupportedConstruct, at, "unary operator");
  }

  BigInt wrap(const BigInt& v) const {
    switch (opts_.arith) {
      case ArithMode::MathInt: return v;
      case ArithMode::Wrap32: return wrap_to(v, 32);
      case ArithMode::Wrap64: return wrap_to(v, 64);
    }
    return v;
  }

  static double to_double(const RtVal& v) {
    if (v.is_float()) return std::get<double>(v.v);
    return std::get<BigInt>(v.v).convert_to<double>();
  }

  RtVal eval_binary(const Expr::Binary& b, const ExprPtr& at) {
    switch (b.op) {
      case BinaryOp::And: {
        RtVal l = eval(b.lhs);
        require_bool(l, b.lhs);
        if (!std::get<bool>(l.v)) return {false};
        RtVal r = eval(b.rhs);
        require_bool(r, b.rhs);
        return r;
      }
      case BinaryOp::Or: {
        RtVal l = eval(b.lhs);
        require_bool(l, b.lhs);
        if (std::get<bool>(l.v)) return {true};
        RtVal r = eval(b.rhs);
        require_bool(r, b.rhs);
        return r;
      }
      case BinaryOp::Implies: {
        RtVal l = eval(b.lhs);
        require_bool(l, b.lhs);
        if (!std::get<bool>(l.v)) return {true};  // vacuous
        RtVal r = eval(b.rhs);
        require_bool(r, b.rhs);
        return r;
      }
      case BinaryOp::ImpliedBy: {
        RtVal l = eval(b.lhs);
        require_bool(l, b.lhs);
        if (std::get<bool>(l.v)) return {true};
        RtVal r = eval(b.rhs);
        require_bool(r, b.rhs);
        return {!std::get<bool>(r.v)};
      }
      case BinaryOp::Iff: {
        RtVal l = eval(b.lhs);
        require_bool(l, b.lhs);
        RtVal r = eval(b.rhs);
        require_bool(r, b.rhs);
        return {std::get<bool>(l.v) == std::get<bool>(r.v)};
      }
      default:
        break;
    }

    RtVal l = eval(b.lhs);
    RtVal r = eval(b.rhs);

    if (b.op == BinaryOp::Eq || b.op == BinaryOp::Ne) {
      bool eq = rt_equal(l, r, at);
      return {b.op == BinaryOp::Eq ? eq : !eq};
    }

    switch (b.op) {
      case BinaryOp::Lt: case BinaryOp::Le: case BinaryOp::Gt: case BinaryOp::Ge:
        return compare(b.op, l, r, at);
      case BinaryOp::Add: case BinaryOp::Sub: case BinaryOp::Mul:
      case BinaryOp::Div: case BinaryOp::Mod:
        return arith(b.op, l, r, at);
      case BinaryOp::Shl: case BinaryOp::Shr: case BinaryOp::Ushr:
        return shift(b.op, l, r, at);
      case BinaryOp::BitAnd: case BinaryOp::BitXor: case BinaryOp::BitOr:
        return bitwise(b.op, l, r, at);
      default:
        fault(EvalErrorReason::UnsupportedConstruct, at, "binary operator");
    }
  }

  bool rt_equal(const RtVal& l, const RtVal& r, const ExprPtr& at) {
    if (l.is_null() || r.is_null()) {
      // Reference comparison: null only equals null. Comparing null
      // against a primitive is a type error, as in Java.
      const RtVal& other = l.is_null() ? r : l;
      if (other.is_null()) return true;
      if (other.is_str() || other.is_array()) return false;
      fault(EvalErrorReason::TypeMismatch, at,
            std::string("cannot compare null with ") + rt_type_name(other));
    }
    if (l.is_bool() && r.is_bool()) return std::get<bool>(l.v) == std::get<bool>(r.v);
    if (l.is_str() && r.is_str()) {
      return std::get<std::string>(l.v) == std::get<std::string>(r.v);
    }
    if (l.is_array() && r.is_array()) {
      const auto& x = *std::get<ArrayV>(l.v);
      const auto& y = *std::get<ArrayV>(r.v);
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!rt_equal(x[i], y[i], at)) return false;
      }
      return true;
    }
    if ((l.is_int() || l.is_float()) && (r.is_int() || r.is_float())) {
      if (l.is_float() || r.is_float()) {
        // Exact bit comparison after promotion (NaN == NaN holds).
        return std::bit_cast<std::uint64_t>(to_double(l)) ==
               std::bit_cast<std::uint64_t>(to_double(r));
      }
      return std::get<BigInt>(l.v) == std::get<BigInt>(r.v);
    }
    fault(EvalErrorReason::TypeMismatch, at,
          std::string("cannot compare ") + rt_type_name(l) + " with " +
              rt_type_name(r));
  }

  RtVal compare(BinaryOp op, const RtVal& l, const RtVal& r, const ExprPtr& at) {
    if (!((l.is_int() || l.is_float()) && (r.is_int() || r.is_float()))) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string("cannot order ") + rt_type_name(l) + " and " +
                rt_type_name(r));
    }
    if (l.is_float() || r.is_float()) {
      double a = to_double(l);
      double b = to_double(r);
      switch (op) {
        case BinaryOp::Lt: return {a < b};
        case BinaryOp::Le: return {a <= b};
        case BinaryOp::Gt: return {a > b};
        default: return {a >= b};
      }
    }
    const BigInt& a = std::get<BigInt>(l.v);
    const BigInt& b = std::get<BigInt>(r.v);
    switch (op) {
      case BinaryOp::Lt: return {a < b};
      case BinaryOp::Le: return {a <= b};
      case BinaryOp::Gt: return {a > b};
      default: return {a >= b};
    }
  }

  RtVal arith(BinaryOp op, const RtVal& l, const RtVal& r, const ExprPtr& at) {
    if (!((l.is_int() || l.is_float()) && (r.is_int() || r.is_float()))) {
      fault(EvalErrorReason::TypeMismatch, at,
            std::string("arithmetic on ") + rt_type_name(l) + " and " +
                rt_type_name(r));
    }
    if (l.is_float() || r.is_float()) {
      double a = to_double(l);
      double b = to_double(r);
      switch (op) {
        case BinaryOp::Add: return {a + b};
        case BinaryOp::Sub: return {a - b};
        case BinaryOp::Mul: return {a * b};
        case BinaryOp::Div: return {a / b};  // IEEE semantics, no fault
        default: return {std::fmod(a, b)};
      }
    }
    const BigInt& a = std::get<BigInt>(l.v);
    const BigInt& b = std::get<BigInt>(r.v);
    switch (op) {
      case BinaryOp::Add: return {wrap(a + b)};
      case BinaryOp::Sub: return {wrap(a - b)};
      case BinaryOp::Mul: return {wrap(a * b)};
      case BinaryOp::Div:
        if (b == 0) fault(EvalErrorReason::DivisionByZero, at, "division by zero");
        return {wrap(a / b)};  // truncates toward zero, as in Java
      default:
        if (b == 0) fault(EvalErrorReason::DivisionByZero, at, "modulo by zero");
        return {wrap(a % b)};  // sign follows dividend, as in Java
    }
  }

  RtVal shift(BinaryOp op, const RtVal& l, const RtVal& r, const ExprPtr& at) {
    BigInt a = require_int(l, at, "shift operand");
    BigInt n = require_int(r, at, "shift amount");
    unsigned width = opts_.arith == ArithMode::Wrap32   ? 32
                     : opts_.arith == ArithMode::Wrap64 ? 64
                                                        : 0;
    if (width != 0) {
      // Java masks the count to the operand width.
      n &= (width - 1);
      a = wrap(a);
    } else {
      if (n < 0) {
        fault(EvalErrorReason::TypeMismatch, at, "negative shift amount " + n.str());
      }
      if (n > 1000000) {
        fault(EvalErrorReason::UnsupportedConstruct, at,
              "shift amount " + n.str() + " too large for unbounded arithmetic");
      }
    }
    auto count = n.convert_to<unsigned>();
    switch (op) {
      case BinaryOp::Shl:
        return {wrap(a << count)};
      case BinaryOp::Shr: {
        // Arithmetic shift: floor division by 2^count.
        BigInt p = BigInt(1) << count;
        BigInt q = a / p;
        if (a < 0 && a % p != 0) q -= 1;
        return {q};
      }
      default: {  // Ushr
        if (width == 0) {
          if (a < 0) {
            fault(EvalErrorReason::UnsupportedConstruct, at,
                  "'>>>' on a negative value has no unbounded-integer meaning");
          }
          return {a >> count};
        }
        BigInt modulus = BigInt(1) << width;
        BigInt unsignedA = a < 0 ? a + modulus : a;
        return {wrap(unsignedA >> count)};
      }
    }
  }

  RtVal bitwise(BinaryOp op, const RtVal& l, const RtVal& r, const ExprPtr& at) {
    if (l.is_bool() && r.is_bool()) {  // non-short-circuit boolean logic
      bool a = std::get<bool>(l.v);
      bool b = std::get<bool>(r.v);
      switch (op) {
        case BinaryOp::BitAnd: return {a && b};
        case BinaryOp::BitXor: return {a != b};
        default: return {a || b};
      }
    }
    BigInt a = require_int(l, at, "bitwise operand");
    BigInt b = require_int(r, at, "bitwise operand");
    // Evaluate over int64 two's complement; wider operands are out of scope.
    if (a < INT64_MIN || a > INT64_MAX || b < INT64_MIN || b > INT64_MAX) {
      fault(EvalErrorReason::UnsupportedConstruct, at,
            "bitwise operation on value outside 64-bit range");
    }
    auto x = a.convert_to<std::int64_t>();
    auto y = b.convert_to<std::int64_t>();
    std::int64_t res;
    switch (op) {
      case BinaryOp::BitAnd: res = x & y; break;
      case BinaryOp::BitXor: res = x ^ y; break;
      default: res = x | y; break;
    }
    return {wrap(BigInt(res))};
  }

  RtVal eval_cast(const Expr::Cast& c, const ExprPtr& at) {
    RtVal v = eval(c.operand);
    BigInt i;
    if (v.is_float()) {
      double d = std::get<double>(v.v);
      // Java narrowing: NaN -> 0, infinities clamp to long range.
      if (std::isnan(d)) {
        i = 0;
      } else if (d >= 9.223372036854775807e18) {
        i = INT64_MAX;
      } else if (d <= -9.223372036854775808e18) {
        i = INT64_MIN;
      } else {
        i = BigInt(static_cast<std::int64_t>(d));
      }
    } else {
      i = require_int(v, c.operand, "cast operand");
    }
    switch (c.target) {
      case IntType::Char: {
        BigInt m = i % 65536;
        if (m < 0) m += 65536;
        return {m};
      }
      case IntType::Int:
        return {wrap_to(i, 32)};
      case IntType::Long:
        return {wrap_to(i, 64)};
    }
    fault(EvalErrorReason::UnsupportedConstruct, at, "cast target");
  }

  // Extracts constant bounds for the quantified variable from the range's
  // top-level conjuncts. Both ends are required; anything else is an
  // unbounded quantification.
  void derive_bounds(const ExprPtr& range, const std::string& var,
                     std::optional<BigInt>& lo, std::optional<BigInt>& hi) {
    if (auto* b = range->as<Expr::Binary>()) {
      if (b->op == BinaryOp::And) {
        derive_bounds(b->lhs, var, lo, hi);
        derive_bounds(b->rhs, var, lo, hi);
        return;
      }
      bool lhsIsVar = false;
      bool rhsIsVar = false;
      if (auto* id = b->lhs->as<Expr::Ident>()) lhsIsVar = id->name == var;
      if (auto* id = b->rhs->as<Expr::Ident>()) rhsIsVar = id->name == var;
      if (lhsIsVar == rhsIsVar) {
        return;  // neither or both sides are the variable: not a usable bound
      }
      const ExprPtr& boundExpr = lhsIsVar ? b->rhs : b->lhs;
      for (const auto& name : free_identifiers(boundExpr)) {
        if (name == var) return;  // bound depends on the variable itself
      }
      RtVal bv = eval(boundExpr);
      if (!bv.is_int()) return;
      const BigInt& c = std::get<BigInt>(bv.v);

      auto setLo = [&](BigInt v) { lo = lo ? std::max(*lo, v) : v; };
      auto setHi = [&](BigInt v) { hi = hi ? std::min(*hi, v) : v; };
      switch (b->op) {
        case BinaryOp::Eq:
          setLo(c);
          setHi(c);
          break;
        case BinaryOp::Lt: lhsIsVar ? setHi(c - 1) : setLo(c + 1); break;
        case BinaryOp::Le: lhsIsVar ? setHi(c) : setLo(c); break;
        case BinaryOp::Gt: lhsIsVar ? setLo(c + 1) : setHi(c - 1); break;
        case BinaryOp::Ge: lhsIsVar ? setLo(c) : setHi(c); break;
        default: break;
      }
    }
  }

  RtVal eval_quantified(const Expr::Quantified& q, const ExprPtr& at) {
    std::optional<BigInt> lo;
    std::optional<BigInt> hi;
    derive_bounds(q.range, q.var, lo, hi);
    if (!lo || !hi) {
      fault(EvalErrorReason::UnboundedQuantifier, at,
            "range does not bound '" + q.var + "' " +
                (!lo && !hi ? "from below or above"
                 : !lo      ? "from below"
                            : "from above"));
    }
    if (*hi >= *lo) {
      BigInt count = *hi - *lo + 1;
      if (count > BigInt(budget_)) {
        fault(EvalErrorReason::QuantifierBudgetExceeded, at,
              "range size " + count.str() + " exceeds remaining budget " +
                  std::to_string(budget_));
      }
    }
    bool isForall = q.kind == QuantKind::Forall;
    for (BigInt i = *lo; i <= *hi; ++i) {
      if (budget_ == 0) {
        fault(EvalErrorReason::QuantifierBudgetExceeded, at,
              "quantifier iteration budget exhausted");
      }
      --budget_;
      scope_.emplace_back(q.var, i);
      struct ScopeGuard {
        std::vector<std::pair<std::string, BigInt>>& s;
        ~ScopeGuard() { s.pop_back(); }
      } guard{scope_};
      RtVal inRange = eval(q.range);
      require_bool(inRange, q.range);
      if (!std::get<bool>(inRange.v)) {
        continue;
      }
      RtVal body = eval(q.body);
      require_bool(body, q.body);
      bool holds = std::get<bool>(body.v);
      if (isForall && !holds) return {false};
      if (!isForall && holds) return {true};
    }
    return {isForall};
  }

  const Env& env_;
  const EvalOptions& opts_;
  std::uint64_t budget_;
  std::vector<std::pair<std::string, BigInt>> scope_;
  bool inOld_ = false;
};

}  // namespace

const char* eval_error_reason_name(EvalErrorReason r) {
  switch (r) {
    case EvalErrorReason::UnsupportedConstruct: return "UnsupportedConstruct";
    case EvalErrorReason::UnboundedQuantifier: return "UnboundedQuantifier";
    case EvalErrorReason::DivisionByZero: return "DivisionByZero";
    case EvalErrorReason::IndexOutOfBounds: return "IndexOutOfBounds";
    case EvalErrorReason::TypeMismatch: return "TypeMismatch";
    case EvalErrorReason::QuantifierBudgetExceeded: return "QuantifierBudgetExceeded";
    case EvalErrorReason::NullDereference: return "NullDereference";
    case EvalErrorReason::BackendFailure: return "BackendFailure";
  }
  return "?";
}

std::string Verdict::to_string() const {
  switch (state_) {
    case State::Holds: return "Holds";
    case State::Violated: return "Violated";
    case State::EvalError:
      return std::string("EvalError(") + eval_error_reason_name(reason_) +
             (detail_.empty() ? "" : ": " + detail_) + ")";
  }
  return "?";
}

Verdict evaluate(const ExprPtr& e, const Env& env, const EvalOptions& opts) {
  try {
    Evaluator ev(env, opts);
    RtVal v = ev.eval(e);
    if (!v.is_bool()) {
      return Verdict::error(EvalErrorReason::TypeMismatch, e->span,
                            "contract expression is not boolean");
    }
    return std::get<bool>(v.v) ? Verdict::holds() : Verdict::violated();
  } catch (const Fault& f) {
    return Verdict::error(f.reason, f.span, f.detail);
  }
}

}  // namespace specharness::jml
