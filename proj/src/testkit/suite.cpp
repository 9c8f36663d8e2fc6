#include "specharness/testkit/suite.hpp"

#include "specharness/util/io.hpp"
#include "specharness/version.hpp"

namespace specharness::testkit {

namespace {

bool value_matches(const Value& v, const ValueType& t) {
  if (v.is_null()) {
    // Only reference types can be null.
    return t.tag == TypeTag::Str || t.tag == TypeTag::Array;
  }
  if (v.tag() != t.tag) {
    return false;
  }
  if (t.tag == TypeTag::Array) {
    return v.as_array().elem == t.elem;
  }
  return true;
}

void check_tuple(const std::vector<Value>& inputs, const MethodSignature& sig,
                 const char* what, std::size_t index) {
  if (inputs.size() != sig.params.size()) {
    throw SuiteError(std::string(what) + " #" + std::to_string(index) + " has " +
                     std::to_string(inputs.size()) + " values, signature expects " +
                     std::to_string(sig.params.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!value_matches(inputs[i], sig.params[i].type)) {
      throw SuiteError(std::string(what) + " #" + std::to_string(index) +
                       ": value for parameter '" + sig.params[i].name +
                       "' does not match declared type " +
                       type_to_string(sig.params[i].type));
    }
  }
}

}  // namespace

std::vector<std::vector<Value>> TestSuite::valid_inputs() const {
  std::vector<std::vector<Value>> out;
  out.reserve(validPairs.size());
  for (const auto& p : validPairs) {
    out.push_back(p.inputs);
  }
  return out;
}

nlohmann::ordered_json signature_to_json(const MethodSignature& sig) {
  nlohmann::ordered_json j;
  j["name"] = sig.name;
  auto params = nlohmann::ordered_json::array();
  for (const auto& p : sig.params) {
    params.push_back({{"name", p.name}, {"type", type_to_string(p.type)}});
  }
  j["params"] = std::move(params);
  j["returnType"] = type_to_string(sig.returnType);
  return j;
}

MethodSignature signature_from_json(const nlohmann::json& j) {
  MethodSignature sig;
  sig.name = j.at("name").get<std::string>();
  for (const auto& p : j.at("params")) {
    MethodSignature::Param param;
    param.name = p.at("name").get<std::string>();
    param.type = type_from_string(p.at("type").get<std::string>());
    sig.params.push_back(std::move(param));
  }
  const std::string ret = j.at("returnType").get<std::string>();
  if (ret == "void") {
    throw SuiteError("void-returning methods cannot be evaluated");
  }
  sig.returnType = type_from_string(ret);
  if (sig.returnType.tag == TypeTag::NullRef) {
    throw SuiteError("return type may not be null");
  }
  return sig;
}

nlohmann::ordered_json suite_to_json(const TestSuite& suite) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kSuiteSchemaVersion;
  j["signature"] = signature_to_json(suite.signature);
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : suite.validPairs) {
    nlohmann::ordered_json pj;
    auto ins = nlohmann::ordered_json::array();
    for (const auto& v : p.inputs) {
      ins.push_back(value_to_json(v));
    }
    pj["inputs"] = std::move(ins);
    pj["output"] = value_to_json(p.output);
    pairs.push_back(std::move(pj));
  }
  j["validPairs"] = std::move(pairs);
  auto invalid = nlohmann::ordered_json::array();
  for (const auto& tuple : suite.invalidInputs) {
    auto ins = nlohmann::ordered_json::array();
    for (const auto& v : tuple) {
      ins.push_back(value_to_json(v));
    }
    invalid.push_back(std::move(ins));
  }
  j["invalidInputs"] = std::move(invalid);
  return j;
}

TestSuite suite_from_json(const nlohmann::json& j) {
  if (j.contains("schemaVersion")) {
    int v = j.at("schemaVersion").get<int>();
    if (v != kSuiteSchemaVersion) {
      throw SuiteError("unsupported suite schemaVersion " + std::to_string(v));
    }
  }
  TestSuite suite;
  suite.signature = signature_from_json(j.at("signature"));
  std::size_t index = 0;
  for (const auto& pj : j.at("validPairs")) {
    TestSuite::Pair pair;
    for (const auto& vj : pj.at("inputs")) {
      pair.inputs.push_back(value_from_json(vj));
    }
    pair.output = value_from_json(pj.at("output"));
    check_tuple(pair.inputs, suite.signature, "validPairs", index);
    if (!value_matches(pair.output, suite.signature.returnType)) {
      throw SuiteError("validPairs #" + std::to_string(index) +
                       ": output does not match return type " +
                       type_to_string(suite.signature.returnType));
    }
    suite.validPairs.push_back(std::move(pair));
    ++index;
  }
  index = 0;
  if (j.contains("invalidInputs")) {
    for (const auto& tj : j.at("invalidInputs")) {
      std::vector<Value> tuple;
      for (const auto& vj : tj) {
        tuple.push_back(value_from_json(vj));
      }
      check_tuple(tuple, suite.signature, "invalidInputs", index);
      suite.invalidInputs.push_back(std::move(tuple));
      ++index;
    }
  }
  return suite;
}

TestSuite load_suite(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(util::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw SuiteError("cannot parse suite file " + path.string() + ": " + e.what());
  }
  return suite_from_json(j);
}

void save_suite(const std::filesystem::path& path, const TestSuite& suite) {
  util::write_file(path, suite_to_json(suite).dump(2) + "\n");
}

TestSuite truncate_pairs(const TestSuite& suite, std::size_t maxPairs) {
  TestSuite out = suite;
  if (out.validPairs.size() > maxPairs) {
    out.validPairs.resize(maxPairs);
  }
  return out;
}

}  // namespace specharness::testkit
