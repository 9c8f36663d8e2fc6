#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "specharness/testkit/suite.hpp"
#include "specharness/testkit/value.hpp"

namespace specharness::testkit {

struct IntMutation {
  enum class Kind {
    Offset,    // o + delta
    FarJump,   // o + 2*|o| + 1 (lands well outside the near neighborhood)
    SignFlip,  // -o (skipped when it duplicates o)
  };
  Kind kind = Kind::Offset;
  std::int64_t delta = 0;
};

struct CharMutation {
  enum class Kind { Offset, CaseFlip };
  Kind kind = Kind::Offset;
  std::int32_t delta = 0;
};

struct FloatMutation {
  enum class Kind { Scale, Offset };
  Kind kind = Kind::Scale;
  double value = 1.0;
};

enum class ArrayOp { InsertElement, DeleteElement, PerturbElement, SwapAdjacent };
enum class StringOp { FlipCase, DropChar, AppendChar };

struct MutationConfig {
  std::size_t mutantsPerOutput = 4;  // k
  std::vector<IntMutation> integerDeltas = {
      {IntMutation::Kind::Offset, 1},
      {IntMutation::Kind::Offset, -1},
      {IntMutation::Kind::FarJump, 0},
      {IntMutation::Kind::SignFlip, 0},
  };
  std::vector<CharMutation> charDeltas = {
      {CharMutation::Kind::Offset, 1},
      {CharMutation::Kind::Offset, -1},
      {CharMutation::Kind::CaseFlip, 0},
  };
  std::vector<FloatMutation> floatFactors = {
      {FloatMutation::Kind::Scale, 2.0},
      {FloatMutation::Kind::Scale, -1.0},
      {FloatMutation::Kind::Offset, 1.0},
  };
  std::set<ArrayOp> arrayOps = {ArrayOp::InsertElement, ArrayOp::DeleteElement,
                                ArrayOp::PerturbElement, ArrayOp::SwapAdjacent};
  std::set<StringOp> stringOps = {StringOp::FlipCase, StringOp::DropChar,
                                  StringOp::AppendChar};
  std::uint64_t seed = 0x5eed;
};

nlohmann::ordered_json mutation_config_to_json(const MutationConfig& cfg);
MutationConfig mutation_config_from_json(const nlohmann::json& j);

struct UnmutableError : std::runtime_error {
  explicit UnmutableError(const std::string& what) : std::runtime_error(what) {}
};

// Produces up to k distinct type-preserving mutants of o, deterministic for
// fixed (o, cfg). Throws UnmutableError when the configured operators cannot
// produce any distinct value.
std::vector<Value> mutate_output(const Value& o, const MutationConfig& cfg);

// The full mutant pool T1: every valid pair's inputs crossed with its
// output's mutants, in suite order then mutant order.
struct MutantPool {
  struct Entry {
    std::size_t pairIndex;
    Value mutant;
  };
  std::vector<Entry> entries;
  std::vector<std::string> warnings;  // pairs skipped as unmutable
};

MutantPool build_mutant_pool(const TestSuite& suite, const MutationConfig& cfg);

}  // namespace specharness::testkit
