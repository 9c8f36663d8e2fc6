#include "specharness/jml/parser.hpp"

#include <set>

namespace specharness::jml {

namespace {

// JML clause-expression grammar, loosest binding first:
//
//   conditional   ::= equivalence [ '?' conditional ':' conditional ]
//   equivalence   ::= implication { '<==>' implication }          (left)
//   implication   ::= logical-or [ '==>' implication ]            (right)
//                   | logical-or { '<==' logical-or }             (left)
//   logical-or    ::= logical-and { '||' logical-and }
//   logical-and   ::= bit-or { '&&' bit-or }
//   bit-or        ::= bit-xor { '|' bit-xor }
//   bit-xor       ::= bit-and { '^' bit-and }
//   bit-and       ::= equality { '&' equality }
//   equality      ::= relational { ('==' | '!=') relational }
//   relational    ::= shift { ('<' | '<=' | '>' | '>=') shift }
//   shift         ::= additive { ('<<' | '>>' | '>>>') additive }
//   additive      ::= multiplicative { ('+' | '-') multiplicative }
//   multiplicative::= unary { ('*' | '/' | '%') unary }
//   unary         ::= ('!' | '-' | '~' | '+') unary | cast | postfix
//   cast          ::= '(' ('char'|'int'|'long') ')' unary
//   postfix       ::= primary { '[' conditional ']' | '.' 'length' }
//   primary       ::= literal | identifier | '\result' | '\old' '(' e ')'
//                   | '(' quantified | conditional ')'
//
// Mixing '==>' and '<==' at one level is rejected, as in JML.

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex_expression(text)) {}

  ExprPtr parse() {
    ExprPtr e = conditional();
    expect_end();
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() const { return toks_[pos_ + 1 < toks_.size() ? pos_ + 1 : pos_]; }
  Token take() { return toks_[pos_++]; }

  void expect_punct(const char* p) {
    if (!cur().is_punct(p)) {
      throw ParseError(std::string("expected '") + p + "'", cur().begin, p);
    }
    ++pos_;
  }

  void expect_end() {
    if (cur().kind != TokKind::End) {
      throw ParseError("trailing input after expression", cur().begin,
                       "end of expression");
    }
  }

  ExprPtr mk(Expr::Node node, std::uint32_t begin, std::uint32_t end) {
    return make_expr(std::move(node), Span{begin, end});
  }

  ExprPtr conditional() {
    ExprPtr c = equivalence();
    if (cur().is_punct("?")) {
      ++pos_;
      ExprPtr t = conditional();
      expect_punct(":");
      ExprPtr e = conditional();
      std::uint32_t end = e->span.end;
      return mk(Expr::Conditional{c, t, e}, c->span.begin, end);
    }
    return c;
  }

  ExprPtr equivalence() {
    ExprPtr lhs = implication();
    while (cur().is_punct("<==>")) {
      ++pos_;
      ExprPtr rhs = implication();
      lhs = mk(Expr::Binary{BinaryOp::Iff, lhs, rhs}, lhs->span.begin, rhs->span.end);
    }
    return lhs;
  }

  ExprPtr implication() {
    ExprPtr lhs = logical_or();
    if (cur().is_punct("==>")) {
      ++pos_;
      ExprPtr rhs = implication();  // right-associative
      if (cur().is_punct("<==")) {
        throw ParseError("cannot mix '==>' and '<==' without parentheses",
                         cur().begin);
      }
      return mk(Expr::Binary{BinaryOp::Implies, lhs, rhs}, lhs->span.begin,
                rhs->span.end);
    }
    while (cur().is_punct("<==")) {
      ++pos_;
      ExprPtr rhs = logical_or();
      if (cur().is_punct("==>")) {
        throw ParseError("cannot mix '<==' and '==>' without parentheses",
                         cur().begin);
      }
      lhs = mk(Expr::Binary{BinaryOp::ImpliedBy, lhs, rhs}, lhs->span.begin,
               rhs->span.end);
    }
    return lhs;
  }

  using SubParser = ExprPtr (Parser::*)();

  ExprPtr left_chain(SubParser sub, std::initializer_list<std::pair<const char*, BinaryOp>> ops) {
    ExprPtr lhs = (this->*sub)();
    for (;;) {
      bool matched = false;
      for (const auto& [text, op] : ops) {
        if (cur().is_punct(text)) {
          ++pos_;
          ExprPtr rhs = (this->*sub)();
          lhs = mk(Expr::Binary{op, lhs, rhs}, lhs->span.begin, rhs->span.end);
          matched = true;
          break;
        }
      }
      if (!matched) {
        return lhs;
      }
    }
  }

  ExprPtr logical_or() { return left_chain(&Parser::logical_and, {{"||", BinaryOp::Or}}); }
  ExprPtr logical_and() { return left_chain(&Parser::bit_or, {{"&&", BinaryOp::And}}); }
  ExprPtr bit_or() { return left_chain(&Parser::bit_xor, {{"|", BinaryOp::BitOr}}); }
  ExprPtr bit_xor() { return left_chain(&Parser::bit_and, {{"^", BinaryOp::BitXor}}); }
  ExprPtr bit_and() { return left_chain(&Parser::equality, {{"&", BinaryOp::BitAnd}}); }

  ExprPtr equality() {
    return left_chain(&Parser::relational,
                      {{"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}});
  }

  ExprPtr relational() {
    return left_chain(&Parser::shift, {{"<=", BinaryOp::Le},
                                       {">=", BinaryOp::Ge},
                                       {"<", BinaryOp::Lt},
                                       {">", BinaryOp::Gt}});
  }

  ExprPtr shift() {
    return left_chain(&Parser::additive, {{">>>", BinaryOp::Ushr},
                                          {"<<", BinaryOp::Shl},
                                          {">>", BinaryOp::Shr}});
  }

  ExprPtr additive() {
    return left_chain(&Parser::multiplicative,
                      {{"+", BinaryOp::Add}, {"-", BinaryOp::Sub}});
  }

  ExprPtr multiplicative() {
    return left_chain(&Parser::unary, {{"*", BinaryOp::Mul},
                                       {"/", BinaryOp::Div},
                                       {"%", BinaryOp::Mod}});
  }

  static bool is_cast_type(const Token& t) {
    return t.kind == TokKind::Ident &&
           (t.text == "char" || t.text == "int" || t.text == "long");
  }

  ExprPtr unary() {
    std::uint32_t begin = cur().begin;
    if (cur().is_punct("!")) {
      ++pos_;
      ExprPtr e = unary();
      return mk(Expr::Unary{UnaryOp::Not, e}, begin, e->span.end);
    }
    if (cur().is_punct("-")) {
      ++pos_;
      ExprPtr e = unary();
      return mk(Expr::Unary{UnaryOp::Neg, e}, begin, e->span.end);
    }
    if (cur().is_punct("~")) {
      ++pos_;
      ExprPtr e = unary();
      return mk(Expr::Unary{UnaryOp::BitNot, e}, begin, e->span.end);
    }
    if (cur().is_punct("+")) {  // unary plus is a no-op
      ++pos_;
      return unary();
    }
    // Primitive cast: '(' type ')' unary. Type keywords cannot be identifiers,
    // so one token of lookahead disambiguates from a parenthesized expression.
    if (cur().is_punct("(") && is_cast_type(next())) {
      ++pos_;
      Token ty = take();
      expect_punct(")");
      ExprPtr e = unary();
      IntType target = ty.text == "char" ? IntType::Char
                       : ty.text == "int" ? IntType::Int
                                          : IntType::Long;
      return mk(Expr::Cast{target, e}, begin, e->span.end);
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    for (;;) {
      if (cur().is_punct("[")) {
        ++pos_;
        ExprPtr idx = conditional();
        std::uint32_t end = cur().end;
        expect_punct("]");
        e = mk(Expr::Index{e, idx}, e->span.begin, end);
      } else if (cur().is_punct(".")) {
        ++pos_;
        Token field = take();
        if (field.kind != TokKind::Ident) {
          throw ParseError("expected field name after '.'", field.begin, "length");
        }
        if (field.text != "length") {
          throw UnsupportedConstructError("field access '." + field.text + "'",
                                          field.begin);
        }
        if (cur().is_punct("(")) {
          throw UnsupportedConstructError("method call '.length()'", cur().begin);
        }
        e = mk(Expr::Length{e}, e->span.begin, field.end);
      } else {
        return e;
      }
    }
  }

  ExprPtr quantified(std::uint32_t begin) {
    // At '\forall' / '\exists', after '('.
    Token kw = take();
    QuantKind kind = kw.text == "forall" ? QuantKind::Forall : QuantKind::Exists;
    Token ty = take();
    IntType varType;
    if (ty.is_ident("int")) {
      varType = IntType::Int;
    } else if (ty.is_ident("long")) {
      varType = IntType::Long;
    } else if (ty.kind == TokKind::Ident) {
      throw UnsupportedConstructError(
          "quantifier over non-integer type '" + ty.text + "'", ty.begin);
    } else {
      throw ParseError("expected bound variable type", ty.begin, "int, long");
    }
    Token var = take();
    if (var.kind != TokKind::Ident) {
      throw ParseError("expected bound variable name", var.begin, "identifier");
    }
    if (cur().is_punct(",")) {
      throw UnsupportedConstructError("multiple bound variables in one quantifier",
                                      cur().begin);
    }
    expect_punct(";");
    ExprPtr range;
    ExprPtr body;
    ExprPtr first = conditional();
    if (cur().is_punct(";")) {
      ++pos_;
      range = first;
      body = conditional();
    } else {
      // Rangeless form binds over an unrestricted domain.
      range = make_expr(Expr::BoolLit{true});
      body = first;
    }
    std::uint32_t end = cur().end;
    expect_punct(")");
    return mk(Expr::Quantified{kind, varType, var.text, range, body}, begin, end);
  }

  ExprPtr primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::IntLit: {
        Token tok = take();
        return mk(Expr::IntLit{tok.intValue}, tok.begin, tok.end);
      }
      case TokKind::FloatLit: {
        Token tok = take();
        return mk(Expr::FloatLit{tok.floatValue}, tok.begin, tok.end);
      }
      case TokKind::CharLit: {
        Token tok = take();
        return mk(Expr::CharLit{static_cast<std::uint16_t>(tok.intValue)}, tok.begin,
                  tok.end);
      }
      case TokKind::StrLit: {
        Token tok = take();
        return mk(Expr::StrLit{tok.text}, tok.begin, tok.end);
      }
      case TokKind::Ident: {
        if (t.text == "true" || t.text == "false") {
          Token tok = take();
          return mk(Expr::BoolLit{tok.text == "true"}, tok.begin, tok.end);
        }
        if (t.text == "null") {
          Token tok = take();
          return mk(Expr::NullLit{}, tok.begin, tok.end);
        }
        if (t.text == "instanceof" || t.text == "new") {
          throw UnsupportedConstructError("'" + t.text + "'", t.begin);
        }
        Token tok = take();
        if (cur().is_punct("(")) {
          throw UnsupportedConstructError("method call '" + tok.text + "(...)'",
                                          tok.begin);
        }
        return mk(Expr::Ident{tok.text}, tok.begin, tok.end);
      }
      case TokKind::Backslash: {
        if (t.text == "result") {
          Token tok = take();
          return mk(Expr::ResultRef{}, tok.begin, tok.end);
        }
        if (t.text == "old") {
          Token tok = take();
          expect_punct("(");
          ExprPtr inner = conditional();
          std::uint32_t end = cur().end;
          expect_punct(")");
          return mk(Expr::Old{inner}, tok.begin, end);
        }
        if (t.text == "forall" || t.text == "exists") {
          throw ParseError("quantified expression must be parenthesized: (\\" +
                               t.text + " ...)",
                           t.begin, "(");
        }
        throw UnsupportedConstructError("\\" + t.text, t.begin);
      }
      case TokKind::Punct: {
        if (t.is_punct("(")) {
          std::uint32_t begin = t.begin;
          ++pos_;
          if (cur().kind == TokKind::Backslash &&
              (cur().text == "forall" || cur().text == "exists")) {
            return quantified(begin);
          }
          ExprPtr e = conditional();
          expect_punct(")");
          return e;
        }
        throw ParseError("unexpected token '" + t.text + "'", t.begin, "expression");
      }
      case TokKind::End:
        throw ParseError("unexpected end of expression", t.begin, "expression");
    }
    throw ParseError("unexpected token", t.begin);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ParseError("empty expression", 0, "expression");
  }
  return Parser(text).parse();
}

}  // namespace specharness::jml
