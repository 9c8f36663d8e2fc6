#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specharness/jml/ast.hpp"
#include "specharness/testkit/suite.hpp"

namespace specharness::jml {

// A method's parsed requires/ensures clauses. The conjunction of the
// requires list is the precondition, the ensures list the postcondition;
// an empty list means `true`.
struct Contract {
  std::vector<ExprPtr> requiresClauses;
  std::vector<ExprPtr> ensuresClauses;
  std::string rawText;  // annotation comments verbatim, in source order

  ExprPtr precondition() const;   // conjunction, literal true when empty
  ExprPtr postcondition() const;
};

// Parses a bare annotation body ("requires ...; ensures ...;") into a
// Contract. Gutter '@' characters and comment markers must already be
// stripped. loop_invariant / maintaining / decreases clauses are ignored.
Contract parse_contract_text(const std::string& text);

struct ContractError : std::runtime_error {
  enum class Kind { NoContractFound, MethodNotFound, AmbiguousMethod };
  ContractError(Kind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind(kind) {}
  Kind kind;
};

struct ExtractedContract {
  Contract contract;
  // Byte ranges of every JML annotation comment in the source (whole file,
  // not just the target method), so stripping can remove them exactly.
  std::vector<std::pair<std::size_t, std::size_t>> annotationSpans;
};

// Finds the JML annotation block directly above `methodName` and parses it.
ExtractedContract extract_contract(const std::string& source,
                                   const std::string& methodName);

// Removes every JML annotation comment. Lines that held only an annotation
// disappear entirely; all other bytes are preserved. Idempotent.
std::string strip_annotations(const std::string& source);

// Reads the parameter list and return type of `methodName` from source
// text. Throws ContractError (method lookup) or testkit::TypeError
// (unsupported parameter/return types).
testkit::MethodSignature parse_method_signature(const std::string& source,
                                                const std::string& methodName);

// True if the method is declared static (affects driver generation).
bool method_is_static(const std::string& source, const std::string& methodName);

}  // namespace specharness::jml
