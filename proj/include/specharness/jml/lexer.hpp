#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "specharness/bigint.hpp"

namespace specharness::jml {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t position, std::string expectedSet = {})
      : std::runtime_error(std::move(msg)), position(position),
        expected(std::move(expectedSet)) {}
  std::size_t position;
  std::string expected;
};

// A construct that is legal JML but outside the supported subset.
struct UnsupportedConstructError : ParseError {
  UnsupportedConstructError(std::string construct, std::size_t position)
      : ParseError("unsupported construct: " + construct, position),
        construct(std::move(construct)) {}
  std::string construct;
};

enum class TokKind {
  End,
  IntLit,      // value in intValue
  FloatLit,    // value in floatValue
  CharLit,     // code point in intValue
  StrLit,      // decoded text
  Ident,       // also keywords true/false/null/int/long/char/...
  Backslash,   // \result, \old, \forall, ... (text holds the name sans '\')
  Punct,       // operator or punctuation, text holds the spelling
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  BigInt intValue;
  double floatValue = 0.0;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  bool is_punct(const char* s) const { return kind == TokKind::Punct && text == s; }
  bool is_ident(const char* s) const { return kind == TokKind::Ident && text == s; }
};

std::vector<Token> lex_expression(const std::string& text);

}  // namespace specharness::jml
