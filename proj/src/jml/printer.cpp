#include "specharness/jml/printer.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace specharness::jml {

namespace {

// Binding strength, loosest first. Matches the parser's grammar ladder.
enum Level : int {
  kConditional = 1,
  kIff = 2,
  kImplies = 3,
  kOr = 4,
  kAnd = 5,
  kBitOr = 6,
  kBitXor = 7,
  kBitAnd = 8,
  kEquality = 9,
  kRelational = 10,
  kShift = 11,
  kAdditive = 12,
  kMultiplicative = 13,
  kUnary = 14,
  kPostfix = 15,
  kPrimary = 16,
};

int op_level(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul: case BinaryOp::Div: case BinaryOp::Mod:
      return kMultiplicative;
    case BinaryOp::Add: case BinaryOp::Sub:
      return kAdditive;
    case BinaryOp::Shl: case BinaryOp::Shr: case BinaryOp::Ushr:
      return kShift;
    case BinaryOp::Lt: case BinaryOp::Le: case BinaryOp::Gt: case BinaryOp::Ge:
      return kRelational;
    case BinaryOp::Eq: case BinaryOp::Ne:
      return kEquality;
    case BinaryOp::BitAnd: return kBitAnd;
    case BinaryOp::BitXor: return kBitXor;
    case BinaryOp::BitOr: return kBitOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::Or: return kOr;
    case BinaryOp::Implies: case BinaryOp::ImpliedBy: return kImplies;
    case BinaryOp::Iff: return kIff;
  }
  return kPrimary;
}

int node_level(const Expr& e) {
  if (auto* b = e.as<Expr::Binary>()) return op_level(b->op);
  if (e.as<Expr::Conditional>()) return kConditional;
  if (e.as<Expr::Unary>() || e.as<Expr::Cast>()) return kUnary;
  if (e.as<Expr::Index>() || e.as<Expr::Length>()) return kPostfix;
  return kPrimary;
}

void escape_char_into(std::string& out, std::uint16_t cp, char quote) {
  switch (cp) {
    case '\b': out += "\\b"; return;
    case '\t': out += "\\t"; return;
    case '\n': out += "\\n"; return;
    case '\f': out += "\\f"; return;
    case '\r': out += "\\r"; return;
    case '\\': out += "\\\\"; return;
    default: break;
  }
  if (cp == static_cast<std::uint16_t>(quote)) {
    out += '\\';
    out += quote;
    return;
  }
  if (cp >= 0x20 && cp <= 0x7E) {
    out += static_cast<char>(cp);
    return;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\u%04X", cp);
  out += buf;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

class Printer {
 public:
  std::string render(const ExprPtr& e) {
    emit(e, kConditional);
    return std::move(out_);
  }

 private:
  void emit(const ExprPtr& e, int minLevel) {
    bool paren = node_level(*e) < minLevel;
    if (paren) out_ += '(';
    visit(e);
    if (paren) out_ += ')';
  }

  void visit(const ExprPtr& ep) {
    const Expr& e = *ep;
    if (auto* b = e.as<Expr::BoolLit>()) {
      out_ += b->value ? "true" : "false";
    } else if (auto* i = e.as<Expr::IntLit>()) {
      out_ += i->value.str();
    } else if (auto* f = e.as<Expr::FloatLit>()) {
      out_ += format_double(f->value);
    } else if (auto* c = e.as<Expr::CharLit>()) {
      out_ += '\'';
      escape_char_into(out_, c->codePoint, '\'');
      out_ += '\'';
    } else if (auto* s = e.as<Expr::StrLit>()) {
      out_ += '"';
      for (char ch : s->value) {
        unsigned char uc = static_cast<unsigned char>(ch);
        if (uc < 0x80) {
          escape_char_into(out_, uc, '"');
        } else {
          out_ += ch;  // UTF-8 continuation bytes pass through
        }
      }
      out_ += '"';
    } else if (e.as<Expr::NullLit>()) {
      out_ += "null";
    } else if (auto* id = e.as<Expr::Ident>()) {
      out_ += id->name;
    } else if (e.as<Expr::ResultRef>()) {
      out_ += "\\result";
    } else if (auto* old = e.as<Expr::Old>()) {
      out_ += "\\old(";
      emit(old->inner, kConditional);
      out_ += ')';
    } else if (auto* ix = e.as<Expr::Index>()) {
      emit(ix->base, kPostfix);
      out_ += '[';
      emit(ix->index, kConditional);
      out_ += ']';
    } else if (auto* len = e.as<Expr::Length>()) {
      emit(len->base, kPostfix);
      out_ += ".length";
    } else if (auto* u = e.as<Expr::Unary>()) {
      out_ += unary_op_text(u->op);
      // A space keeps adjacent '-' tokens from reading as one.
      if (u->op == UnaryOp::Neg) {
        if (auto* inner = u->operand->as<Expr::Unary>();
            inner && inner->op == UnaryOp::Neg) {
          out_ += ' ';
        }
      }
      emit(u->operand, kUnary);
    } else if (auto* b2 = e.as<Expr::Binary>()) {
      emit_binary(*b2);
    } else if (auto* c2 = e.as<Expr::Conditional>()) {
      emit(c2->cond, kIff);
      out_ += " ? ";
      emit(c2->thenBranch, kConditional);
      out_ += " : ";
      emit(c2->elseBranch, kConditional);
    } else if (auto* q = e.as<Expr::Quantified>()) {
      out_ += '(';
      out_ += q->kind == QuantKind::Forall ? "\\forall " : "\\exists ";
      out_ += int_type_text(q->varType);
      out_ += ' ';
      out_ += q->var;
      out_ += "; ";
      emit(q->range, kConditional);
      out_ += "; ";
      emit(q->body, kConditional);
      out_ += ')';
    } else if (auto* cast = e.as<Expr::Cast>()) {
      out_ += '(';
      out_ += int_type_text(cast->target);
      out_ += ") ";
      emit(cast->operand, kUnary);
    }
  }

  void emit_binary(const Expr::Binary& b) {
    int level = op_level(b.op);
    switch (b.op) {
      case BinaryOp::Implies: {
        // Right-associative; '<==' on the right must be parenthesized.
        emit(b.lhs, level + 1);
        out_ += " ==> ";
        bool rhsIsImpliedBy = false;
        if (auto* rb = b.rhs->as<Expr::Binary>()) {
          rhsIsImpliedBy = rb->op == BinaryOp::ImpliedBy;
        }
        emit(b.rhs, rhsIsImpliedBy ? level + 1 : level);
        return;
      }
      case BinaryOp::ImpliedBy: {
        bool lhsIsImplies = false;
        if (auto* lb = b.lhs->as<Expr::Binary>()) {
          lhsIsImplies = lb->op == BinaryOp::Implies;
        }
        emit(b.lhs, lhsIsImplies ? level + 1 : level);
        out_ += " <== ";
        emit(b.rhs, level + 1);
        return;
      }
      default:
        break;
    }
    emit(b.lhs, level);
    out_ += ' ';
    out_ += binary_op_text(b.op);
    out_ += ' ';
    emit(b.rhs, level + 1);
  }

  std::string out_;
};

void dump(const ExprPtr& ep, int depth, std::ostringstream& out) {
  const Expr& e = *ep;
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (auto* b = e.as<Expr::BoolLit>()) {
    out << "bool " << (b->value ? "true" : "false") << '\n';
  } else if (auto* i = e.as<Expr::IntLit>()) {
    out << "int " << i->value.str() << '\n';
  } else if (auto* f = e.as<Expr::FloatLit>()) {
    out << "float " << format_double(f->value) << '\n';
  } else if (auto* c = e.as<Expr::CharLit>()) {
    out << "char " << c->codePoint << '\n';
  } else if (auto* s = e.as<Expr::StrLit>()) {
    out << "string \"" << s->value << "\"\n";
  } else if (e.as<Expr::NullLit>()) {
    out << "null\n";
  } else if (auto* id = e.as<Expr::Ident>()) {
    out << "ident " << id->name << '\n';
  } else if (e.as<Expr::ResultRef>()) {
    out << "\\result\n";
  } else if (auto* old = e.as<Expr::Old>()) {
    out << "\\old\n";
    dump(old->inner, depth + 1, out);
  } else if (auto* ix = e.as<Expr::Index>()) {
    out << "index\n";
    dump(ix->base, depth + 1, out);
    dump(ix->index, depth + 1, out);
  } else if (auto* len = e.as<Expr::Length>()) {
    out << ".length\n";
    dump(len->base, depth + 1, out);
  } else if (auto* u = e.as<Expr::Unary>()) {
    out << "unary " << unary_op_text(u->op) << '\n';
    dump(u->operand, depth + 1, out);
  } else if (auto* b2 = e.as<Expr::Binary>()) {
    out << "binary " << binary_op_text(b2->op) << '\n';
    dump(b2->lhs, depth + 1, out);
    dump(b2->rhs, depth + 1, out);
  } else if (auto* c2 = e.as<Expr::Conditional>()) {
    out << "conditional\n";
    dump(c2->cond, depth + 1, out);
    dump(c2->thenBranch, depth + 1, out);
    dump(c2->elseBranch, depth + 1, out);
  } else if (auto* q = e.as<Expr::Quantified>()) {
    out << (q->kind == QuantKind::Forall ? "forall " : "exists ")
        << int_type_text(q->varType) << ' ' << q->var << '\n';
    dump(q->range, depth + 1, out);
    dump(q->body, depth + 1, out);
  } else if (auto* cast = e.as<Expr::Cast>()) {
    out << "cast " << int_type_text(cast->target) << '\n';
    dump(cast->operand, depth + 1, out);
  }
}

}  // namespace

std::string print_expression(const ExprPtr& e) { return Printer().render(e); }

std::string dump_tree(const ExprPtr& e) {
  std::ostringstream out;
  dump(e, 0, out);
  return out.str();
}

}  // namespace specharness::jml
