#include "specharness/jml/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace specharness::jml {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_part(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Multi-character operators, longest first.
const char* kPuncts[] = {
    "<==>", "==>", "<==", ">>>", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",   "||",  "<",  ">",   "+",  "-",  "*",  "/",  "%",  "&",
    "|",    "^",   "!",  "~",   "?",  ":",  "(",  ")",  "[",  "]",
    ";",    ",",   ".",
};

std::uint16_t decode_escape(const std::string& s, std::size_t& i) {
  // s[i] is the char after the backslash.
  char c = s[i++];
  switch (c) {
    case 'b': return '\b';
    case 't': return '\t';
    case 'n': return '\n';
    case 'f': return '\f';
    case 'r': return '\r';
    case '"': return '"';
    case '\'': return '\'';
    case '\\': return '\\';
    case '0': return 0;
    case 'u': {
      if (i + 4 > s.size()) {
        throw ParseError("truncated \\u escape", i);
      }
      unsigned v = 0;
      for (int k = 0; k < 4; ++k) {
        char h = s[i++];
        v <<= 4;
        if (h >= '0' && h <= '9') v |= static_cast<unsigned>(h - '0');
        else if (h >= 'a' && h <= 'f') v |= static_cast<unsigned>(h - 'a' + 10);
        else if (h >= 'A' && h <= 'F') v |= static_cast<unsigned>(h - 'A' + 10);
        else throw ParseError("bad hex digit in \\u escape", i - 1);
      }
      return static_cast<std::uint16_t>(v);
    }
    default:
      throw ParseError(std::string("unknown escape: \\") + c, i - 1);
  }
}

}  // namespace

std::vector<Token> lex_expression(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.begin = static_cast<std::uint32_t>(i);

    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_part(text[j])) ++j;
      t.kind = TokKind::Ident;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (c == '\\') {
      std::size_t j = i + 1;
      while (j < n && ident_part(text[j])) ++j;
      if (j == i + 1) {
        throw ParseError("stray backslash", i);
      }
      t.kind = TokKind::Backslash;
      t.text = text.substr(i + 1, j - i - 1);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < n &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      bool isFloat = false;
      if (c == '0' && j + 1 < n && (text[j + 1] == 'x' || text[j + 1] == 'X')) {
        j += 2;
        std::size_t hexStart = j;
        while (j < n && std::isxdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == hexStart) {
          throw ParseError("malformed hex literal", i);
        }
        t.kind = TokKind::IntLit;
        t.intValue = BigInt("0x" + text.substr(hexStart, j - hexStart));
        if (j < n && (text[j] == 'l' || text[j] == 'L')) ++j;
      } else {
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j < n && text[j] == '.' &&
            !(j + 1 < n && text[j + 1] == 'l')) {  // not "1.length" (arrays only anyway)
          isFloat = true;
          ++j;
          while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
        if (j < n && (text[j] == 'e' || text[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
          if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
            isFloat = true;
            j = k;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
          }
        }
        if (j < n && (text[j] == 'f' || text[j] == 'F' || text[j] == 'd' || text[j] == 'D')) {
          isFloat = true;
          ++j;
        }
        std::string lit = text.substr(i, j - i);
        if (isFloat) {
          t.kind = TokKind::FloatLit;
          t.floatValue = std::strtod(lit.c_str(), nullptr);
        } else {
          bool longSuffix = false;
          if (j < n && (text[j] == 'l' || text[j] == 'L')) {
            longSuffix = true;
            ++j;
          }
          (void)longSuffix;
          t.kind = TokKind::IntLit;
          if (lit.size() > 1 && lit[0] == '0') {
            // Java octal
            BigInt v = 0;
            for (std::size_t k = 1; k < lit.size(); ++k) {
              if (lit[k] < '0' || lit[k] > '7') {
                throw ParseError("malformed octal literal", i);
              }
              v = v * 8 + (lit[k] - '0');
            }
            t.intValue = v;
          } else {
            t.intValue = BigInt(lit);
          }
        }
      }
      i = j;
    } else if (c == '\'') {
      std::size_t j = i + 1;
      if (j >= n) {
        throw ParseError("unterminated character literal", i);
      }
      std::uint16_t cp;
      if (text[j] == '\\') {
        ++j;
        cp = decode_escape(text, j);
      } else if (text[j] == '\'') {
        throw ParseError("empty character literal", i);
      } else {
        cp = static_cast<unsigned char>(text[j]);
        ++j;
      }
      if (j >= n || text[j] != '\'') {
        throw ParseError("unterminated character literal", i);
      }
      ++j;
      t.kind = TokKind::CharLit;
      t.intValue = cp;
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      std::string s;
      while (j < n && text[j] != '"') {
        if (text[j] == '\\') {
          ++j;
          std::uint16_t cp = decode_escape(text, j);
          if (cp < 128) {
            s.push_back(static_cast<char>(cp));
          } else {  // UTF-8 encode BMP code point
            if (cp < 0x800) {
              s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            } else {
              s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
              s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            }
            s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
          }
        } else {
          s.push_back(text[j]);
          ++j;
        }
      }
      if (j >= n) {
        throw ParseError("unterminated string literal", i);
      }
      ++j;
      t.kind = TokKind::StrLit;
      t.text = s;
      i = j;
    } else {
      bool matched = false;
      for (const char* p : kPuncts) {
        std::size_t len = std::char_traits<char>::length(p);
        if (text.compare(i, len, p) == 0) {
          t.kind = TokKind::Punct;
          t.text = p;
          i += len;
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
    }
    t.end = static_cast<std::uint32_t>(i);
    out.push_back(std::move(t));
  }

  Token end;
  end.kind = TokKind::End;
  end.begin = end.end = static_cast<std::uint32_t>(n);
  out.push_back(end);
  return out;
}

}  // namespace specharness::jml
