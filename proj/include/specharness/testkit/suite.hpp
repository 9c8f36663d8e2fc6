#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "specharness/testkit/value.hpp"

namespace specharness::testkit {

struct MethodSignature {
  struct Param {
    std::string name;
    ValueType type;
  };
  std::string name;
  std::vector<Param> params;
  ValueType returnType;  // never void; enforced on load
};

struct SuiteError : std::runtime_error {
  explicit SuiteError(const std::string& what) : std::runtime_error(what) {}
};

// A task's test data: valid input/output pairs (T) and explicitly provided
// invalid inputs (T-). Invalid inputs are never synthesized.
struct TestSuite {
  struct Pair {
    std::vector<Value> inputs;
    Value output;
  };

  MethodSignature signature;
  std::vector<Pair> validPairs;
  std::vector<std::vector<Value>> invalidInputs;

  // T+: the input projection of validPairs.
  std::vector<std::vector<Value>> valid_inputs() const;
};

nlohmann::ordered_json signature_to_json(const MethodSignature& sig);
MethodSignature signature_from_json(const nlohmann::json& j);

nlohmann::ordered_json suite_to_json(const TestSuite& suite);
TestSuite suite_from_json(const nlohmann::json& j);

TestSuite load_suite(const std::filesystem::path& path);
void save_suite(const std::filesystem::path& path, const TestSuite& suite);

// First maxPairs valid pairs, everything else unchanged.
TestSuite truncate_pairs(const TestSuite& suite, std::size_t maxPairs);

}  // namespace specharness::testkit
