#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "specharness/jml/ast.hpp"
#include "specharness/testkit/value.hpp"

namespace specharness::jml {

// Concrete state for one contract check: parameter bindings, the return
// value (postcondition checks only), and the pre-state snapshot consulted
// by \old. Harness stubs never reassign parameters, so oldBindings equals
// bindings there.
struct Env {
  std::map<std::string, testkit::Value> bindings;
  std::optional<testkit::Value> resultValue;
  std::map<std::string, testkit::Value> oldBindings;

  static Env with(std::map<std::string, testkit::Value> params,
                  std::optional<testkit::Value> result = std::nullopt) {
    Env env;
    env.oldBindings = params;
    env.bindings = std::move(params);
    env.resultValue = std::move(result);
    return env;
  }
};

enum class EvalErrorReason {
  UnsupportedConstruct,
  UnboundedQuantifier,
  DivisionByZero,
  IndexOutOfBounds,
  TypeMismatch,
  QuantifierBudgetExceeded,
  NullDereference,
  BackendFailure,  // external-backend checks only
};

const char* eval_error_reason_name(EvalErrorReason r);

// Three-valued check outcome.
class Verdict {
 public:
  enum class State { Holds, Violated, EvalError };

  static Verdict holds() { return Verdict(State::Holds); }
  static Verdict violated() { return Verdict(State::Violated); }
  static Verdict error(EvalErrorReason reason, Span span, std::string detail) {
    Verdict v(State::EvalError);
    v.reason_ = reason;
    v.span_ = span;
    v.detail_ = std::move(detail);
    return v;
  }

  State state() const { return state_; }
  bool is_holds() const { return state_ == State::Holds; }
  bool is_violated() const { return state_ == State::Violated; }
  bool is_error() const { return state_ == State::EvalError; }

  EvalErrorReason reason() const { return reason_; }
  Span span() const { return span_; }
  const std::string& detail() const { return detail_; }

  std::string to_string() const;

 private:
  explicit Verdict(State s) : state_(s) {}
  State state_;
  EvalErrorReason reason_ = EvalErrorReason::UnsupportedConstruct;
  Span span_{};
  std::string detail_;
};

enum class ArithMode {
  MathInt,  // unbounded mathematical integers
  Wrap32,   // two's-complement wraparound at 32 bits
  Wrap64,
};

struct EvalOptions {
  ArithMode arith = ArithMode::MathInt;
  std::uint64_t quantifierBudget = 100000;
};

// Evaluates a boolean contract expression against a concrete environment.
// Never throws for input-value problems; those come back as EvalError
// verdicts. && / || / ==> short-circuit, so a guarded index never faults
// when its guard fails.
Verdict evaluate(const ExprPtr& e, const Env& env, const EvalOptions& opts = {});

}  // namespace specharness::jml
