#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace specharness::java {

struct LexError : std::runtime_error {
  LexError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), position(position) {}
  std::size_t position;
};

enum class JTokKind {
  Ident,       // identifiers and keywords
  Number,
  CharLit,
  StrLit,
  Punct,
  Comment,     // ordinary // or /* */ comment
  JmlComment,  // //@ ... or /*@ ... @*/ (the '@' abuts the opener)
};

struct JToken {
  JTokKind kind;
  std::string text;  // raw source text of the token
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
};

// Tokenizes Java source. Comments are emitted as tokens so callers can
// locate JML annotations; strip them for code comparison.
std::vector<JToken> lex_java(const std::string& source);

// Code tokens only (comments removed), for token-sequence comparison.
std::vector<JToken> lex_java_code(const std::string& source);

}  // namespace specharness::java
