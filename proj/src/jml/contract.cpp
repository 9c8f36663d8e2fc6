#include "specharness/jml/contract.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "specharness/java/lexer.hpp"
#include "specharness/jml/parser.hpp"

namespace specharness::jml {

using java::JToken;
using java::JTokKind;

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_punct(const JToken& t, const char* s) {
  return t.kind == JTokKind::Punct && t.text == s;
}

bool is_comment(const JToken& t) {
  return t.kind == JTokKind::Comment || t.kind == JTokKind::JmlComment;
}

std::size_t next_code(const std::vector<JToken>& toks, std::size_t i) {
  for (std::size_t j = i + 1; j < toks.size(); ++j) {
    if (!is_comment(toks[j])) return j;
  }
  return kNone;
}

std::size_t prev_code(const std::vector<JToken>& toks, std::size_t i) {
  for (std::size_t j = i; j-- > 0;) {
    if (!is_comment(toks[j])) return j;
  }
  return kNone;
}

const std::set<std::string> kModifiers = {
    "public", "private", "protected", "static",   "final",
    "native", "abstract", "default",  "strictfp", "synchronized",
};

const std::set<std::string> kNonTypePredecessors = {
    "return", "new", "throw", "else", "case", "instanceof", "if", "while",
};

// Indices of `name` tokens that look like method declarations: inside the
// class body (brace depth 1), followed by '(' and preceded by a type.
std::vector<std::size_t> find_method_decls(const std::vector<JToken>& toks,
                                           const std::string& name) {
  std::vector<std::size_t> found;
  int depth = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const JToken& t = toks[i];
    if (t.kind == JTokKind::Punct) {
      if (t.text == "{") ++depth;
      if (t.text == "}") --depth;
      continue;
    }
    if (t.kind != JTokKind::Ident || t.text != name || depth != 1) {
      continue;
    }
    std::size_t nxt = next_code(toks, i);
    if (nxt == kNone || !is_punct(toks[nxt], "(")) {
      continue;
    }
    std::size_t prv = prev_code(toks, i);
    if (prv == kNone) {
      continue;
    }
    const JToken& p = toks[prv];
    bool typeish =
        (p.kind == JTokKind::Ident && !kNonTypePredecessors.contains(p.text)) ||
        is_punct(p, "]") || is_punct(p, ">");
    if (typeish) {
      found.push_back(i);
    }
  }
  return found;
}

// Walks back over modifiers, the return type and annotations to the first
// token of the declaration.
std::size_t decl_start(const std::vector<JToken>& toks, std::size_t nameTok) {
  std::size_t start = nameTok;
  std::size_t j = nameTok;
  for (;;) {
    std::size_t p = prev_code(toks, j);
    if (p == kNone) break;
    const JToken& t = toks[p];
    bool partOfDecl = t.kind == JTokKind::Ident || is_punct(t, "[") ||
                      is_punct(t, "]") || is_punct(t, "@");
    if (!partOfDecl) break;
    if (t.kind == JTokKind::Ident &&
        (t.text == "class" || t.text == "interface" || t.text == "enum")) {
      break;
    }
    start = p;
    j = p;
  }
  return start;
}

std::size_t locate_method(const std::vector<JToken>& toks, const std::string& name) {
  auto decls = find_method_decls(toks, name);
  if (decls.empty()) {
    throw ContractError(ContractError::Kind::MethodNotFound,
                        "no method named '" + name + "' found");
  }
  if (decls.size() > 1) {
    throw ContractError(ContractError::Kind::AmbiguousMethod,
                        "method '" + name + "' is declared more than once");
  }
  return decls[0];
}

// Inner text of one annotation comment: markers and '@' gutters removed.
std::string annotation_body(const std::string& tokText) {
  if (tokText.starts_with("//@")) {
    return tokText.substr(3);
  }
  // Block form: /*@ ... @*/ (closing '@' optional).
  std::string inner = tokText.substr(3, tokText.size() - 5);
  std::string out;
  std::size_t pos = 0;
  bool firstLine = true;
  while (pos <= inner.size()) {
    std::size_t nl = inner.find('\n', pos);
    std::string line = inner.substr(pos, nl == std::string::npos ? nl : nl - pos);
    if (!firstLine) {
      std::size_t k = 0;
      while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
      while (k < line.size() && line[k] == '@') ++k;
      line = line.substr(k);
    }
    if (!out.empty()) out += '\n';
    out += line;
    firstLine = false;
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_clauses(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
    } else if (c == '\'' || c == '"') {
      char quote = c;
      cur += c;
      ++i;
      while (i < text.size() && text[i] != quote) {
        cur += text[i];
        if (text[i] == '\\' && i + 1 < text.size()) {
          cur += text[i + 1];
          ++i;
        }
        ++i;
      }
      if (i < text.size()) cur += text[i];
      continue;
    } else if (c == ';' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ExprPtr conjunction(const std::vector<ExprPtr>& clauses) {
  if (clauses.empty()) {
    return make_expr(Expr::BoolLit{true});
  }
  ExprPtr acc = clauses[0];
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    acc = make_expr(Expr::Binary{BinaryOp::And, acc, clauses[i]});
  }
  return acc;
}

}  // namespace

ExprPtr Contract::precondition() const { return conjunction(requiresClauses); }
ExprPtr Contract::postcondition() const { return conjunction(ensuresClauses); }

Contract parse_contract_text(const std::string& text) {
  Contract contract;
  contract.rawText = text;
  for (const std::string& raw : split_clauses(text)) {
    std::string clause = trim(raw);
    if (clause.empty()) {
      continue;
    }
    std::size_t k = 0;
    while (k < clause.size() &&
           (std::isalnum(static_cast<unsigned char>(clause[k])) || clause[k] == '_')) {
      ++k;
    }
    std::string keyword = clause.substr(0, k);
    std::string rest = trim(clause.substr(k));
    if (keyword == "requires") {
      contract.requiresClauses.push_back(parse_expression(rest));
    } else if (keyword == "ensures") {
      contract.ensuresClauses.push_back(parse_expression(rest));
    } else if (keyword == "loop_invariant" || keyword == "maintaining" ||
               keyword == "decreases" || keyword == "decreasing") {
      // Tolerated; the metrics do not use them.
      continue;
    } else {
      throw UnsupportedConstructError("clause '" + keyword + "'", 0);
    }
  }
  return contract;
}

ExtractedContract extract_contract(const std::string& source,
                                   const std::string& methodName) {
  auto toks = java::lex_java(source);
  std::size_t nameTok = locate_method(toks, methodName);
  std::size_t start = decl_start(toks, nameTok);

  // The contract is the run of JML comments immediately above the
  // declaration (ordinary comments may be interleaved).
  std::vector<std::size_t> runIdx;
  for (std::size_t j = start; j-- > 0;) {
    if (toks[j].kind == JTokKind::JmlComment) {
      runIdx.push_back(j);
    } else if (toks[j].kind == JTokKind::Comment) {
      continue;
    } else {
      break;
    }
  }
  std::reverse(runIdx.begin(), runIdx.end());
  if (runIdx.empty()) {
    throw ContractError(ContractError::Kind::NoContractFound,
                        "no JML annotation above method '" + methodName + "'");
  }

  std::string combined;
  std::string raw;
  for (std::size_t idx : runIdx) {
    if (!combined.empty()) combined += '\n';
    combined += annotation_body(toks[idx].text);
    if (!raw.empty()) raw += '\n';
    raw += toks[idx].text;
  }

  ExtractedContract out;
  out.contract = parse_contract_text(combined);
  out.contract.rawText = raw;
  for (const auto& t : toks) {
    if (t.kind == JTokKind::JmlComment) {
      out.annotationSpans.emplace_back(t.begin, t.end);
    }
  }
  return out;
}

std::string strip_annotations(const std::string& source) {
  std::vector<JToken> toks = java::lex_java(source);
  std::vector<std::pair<std::size_t, std::size_t>> cuts;
  for (const auto& t : toks) {
    if (t.kind != JTokKind::JmlComment) {
      continue;
    }
    std::size_t lineStart = t.begin;
    while (lineStart > 0 && source[lineStart - 1] != '\n') --lineStart;
    std::size_t lineEnd = source.find('\n', t.end);
    bool blankBefore = true;
    for (std::size_t k = lineStart; k < t.begin; ++k) {
      if (source[k] != ' ' && source[k] != '\t') blankBefore = false;
    }
    bool blankAfter = true;
    std::size_t afterEnd = lineEnd == std::string::npos ? source.size() : lineEnd;
    for (std::size_t k = t.end; k < afterEnd; ++k) {
      if (source[k] != ' ' && source[k] != '\t' && source[k] != '\r') {
        blankAfter = false;
      }
    }
    if (blankBefore && blankAfter) {
      cuts.emplace_back(lineStart,
                        lineEnd == std::string::npos ? source.size() : lineEnd + 1);
    } else {
      cuts.emplace_back(t.begin, t.end);
    }
  }
  std::string out;
  out.reserve(source.size());
  std::size_t pos = 0;
  for (const auto& [b, e] : cuts) {
    if (b > pos) {
      out.append(source, pos, b - pos);
    }
    pos = std::max(pos, e);
  }
  if (pos < source.size()) {
    out.append(source, pos, source.size() - pos);
  }
  return out;
}

testkit::MethodSignature parse_method_signature(const std::string& source,
                                                const std::string& methodName) {
  auto toks = java::lex_java_code(source);
  std::size_t nameTok = locate_method(toks, methodName);
  std::size_t start = decl_start(toks, nameTok);

  auto typeAt = [&](std::size_t from, std::size_t to) -> testkit::ValueType {
    // Tokens in [from, to) form a type: base identifier plus [] pairs.
    std::string base;
    int dims = 0;
    for (std::size_t k = from; k < to; ++k) {
      if (toks[k].kind == JTokKind::Ident) {
        if (kModifiers.contains(toks[k].text)) continue;
        if (!base.empty()) {
          throw testkit::TypeError("unsupported compound type near '" +
                                   toks[k].text + "'");
        }
        base = toks[k].text;
      } else if (is_punct(toks[k], "[")) {
        ++dims;
      } else if (is_punct(toks[k], "]")) {
        continue;
      } else {
        throw testkit::TypeError("unsupported type token '" + toks[k].text + "'");
      }
    }
    if (base.empty()) {
      throw testkit::TypeError("missing type");
    }
    if (dims > 1) {
      throw testkit::TypeError("multi-dimensional arrays are not supported");
    }
    return testkit::type_from_string(dims == 1 ? base + "[]" : base);
  };

  testkit::MethodSignature sig;
  sig.name = methodName;
  sig.returnType = typeAt(start, nameTok);

  std::size_t i = nameTok + 1;  // at '('
  if (!is_punct(toks[i], "(")) {
    throw ContractError(ContractError::Kind::MethodNotFound,
                        "malformed declaration of '" + methodName + "'");
  }
  ++i;
  while (i < toks.size() && !is_punct(toks[i], ")")) {
    std::size_t typeBegin = i;
    // Parameter name is the last identifier before ',' / ')' (possibly
    // followed by C-style dims).
    std::size_t j = i;
    std::size_t lastIdent = kNone;
    while (j < toks.size() && !is_punct(toks[j], ",") && !is_punct(toks[j], ")")) {
      if (toks[j].kind == JTokKind::Ident) lastIdent = j;
      if (is_punct(toks[j], "...")) {
        throw testkit::TypeError("varargs parameters are not supported");
      }
      ++j;
    }
    if (lastIdent == kNone) {
      throw testkit::TypeError("malformed parameter list");
    }
    testkit::MethodSignature::Param param;
    param.name = toks[lastIdent].text;
    int trailingDims = 0;
    for (std::size_t k = lastIdent + 1; k < j; ++k) {
      if (is_punct(toks[k], "[")) ++trailingDims;
    }
    testkit::ValueType t = typeAt(typeBegin, lastIdent);
    if (trailingDims > 0) {
      if (t.is_array() || trailingDims > 1) {
        throw testkit::TypeError("multi-dimensional arrays are not supported");
      }
      t = testkit::type_from_string(testkit::type_to_string(t) + "[]");
    }
    param.type = t;
    sig.params.push_back(std::move(param));
    i = j;
    if (is_punct(toks[i], ",")) ++i;
  }
  return sig;
}

bool method_is_static(const std::string& source, const std::string& methodName) {
  auto toks = java::lex_java_code(source);
  std::size_t nameTok = locate_method(toks, methodName);
  std::size_t start = decl_start(toks, nameTok);
  for (std::size_t k = start; k < nameTok; ++k) {
    if (toks[k].kind == JTokKind::Ident && toks[k].text == "static") {
      return true;
    }
  }
  return false;
}

}  // namespace specharness::jml
