#include "specharness/java/lexer.hpp"

#include <cctype>

namespace specharness::java {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_part(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Multi-character operators first so maximal munch wins.
const char* kOps[] = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "&&", "||", "+=", "-=", "*=", "/=", "%=",
    "&=",  "|=",  "^=",  "<",   ">",  "=",  "+",  "-",  "*",  "/",  "%",
    "&",   "|",   "^",   "!",   "~",  "?",  ":",  ";",  ",",  ".",  "(",
    ")",   "[",   "]",   "{",   "}",  "@",
};

}  // namespace

std::vector<JToken> lex_java(const std::string& src) {
  std::vector<JToken> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  int line = 1;

  auto push = [&](JTokKind kind, std::size_t begin, std::size_t end) {
    out.push_back(JToken{kind, src.substr(begin, end - begin), begin, end, line});
  };

  while (i < n) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t begin = i;

    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      bool jml = i + 2 < n && src[i + 2] == '@';
      std::size_t j = i + 2;
      while (j < n && src[j] != '\n') ++j;
      push(jml ? JTokKind::JmlComment : JTokKind::Comment, begin, j);
      i = j;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      bool jml = i + 2 < n && src[i + 2] == '@';
      std::size_t j = i + 2;
      while (j + 1 < n && !(src[j] == '*' && src[j + 1] == '/')) {
        if (src[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= n) {
        throw LexError("unterminated block comment", begin);
      }
      push(jml ? JTokKind::JmlComment : JTokKind::Comment, begin, j + 2);
      i = j + 2;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_part(src[j])) ++j;
      push(JTokKind::Ident, begin, j);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      bool seenDot = false;
      bool seenExp = false;
      while (j < n) {
        char d = src[j];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          if ((d == 'e' || d == 'E') && j + 1 < n &&
              (src[j + 1] == '+' || src[j + 1] == '-') && !seenExp &&
              src.compare(i, 2, "0x") != 0 && src.compare(i, 2, "0X") != 0) {
            seenExp = true;
            j += 2;
            continue;
          }
          ++j;
        } else if (d == '.' && !seenDot &&
                   (j + 1 >= n || src[j + 1] != '.')) {
          // One dot may belong to a float literal; `1.foo` is not valid
          // Java anyway, so greedily taking it is safe for our inputs.
          if (j + 1 < n && (ident_start(src[j + 1]))) {
            break;  // method/field access on a literal: leave the dot
          }
          seenDot = true;
          ++j;
        } else {
          break;
        }
      }
      push(JTokKind::Number, begin, j);
      i = j;
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '\'') {
        if (src[j] == '\\' && j + 1 < n) {
          j += 2;
        } else if (src[j] == '\n') {
          throw LexError("unterminated character literal", begin);
        } else {
          ++j;
        }
      }
      if (j >= n) {
        throw LexError("unterminated character literal", begin);
      }
      push(JTokKind::CharLit, begin, j + 1);
      i = j + 1;
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < n) {
          j += 2;
        } else if (src[j] == '\n') {
          throw LexError("unterminated string literal", begin);
        } else {
          ++j;
        }
      }
      if (j >= n) {
        throw LexError("unterminated string literal", begin);
      }
      push(JTokKind::StrLit, begin, j + 1);
      i = j + 1;
      continue;
    }
    bool matched = false;
    for (const char* op : kOps) {
      std::size_t len = std::char_traits<char>::length(op);
      if (src.compare(i, len, op) == 0) {
        push(JTokKind::Punct, begin, i + len);
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw LexError(std::string("unexpected character '") + c + "' in Java source", i);
    }
  }
  return out;
}

std::vector<JToken> lex_java_code(const std::string& source) {
  std::vector<JToken> toks = lex_java(source);
  std::vector<JToken> code;
  code.reserve(toks.size());
  for (auto& t : toks) {
    if (t.kind != JTokKind::Comment && t.kind != JTokKind::JmlComment) {
      code.push_back(std::move(t));
    }
  }
  return code;
}

}  // namespace specharness::java
