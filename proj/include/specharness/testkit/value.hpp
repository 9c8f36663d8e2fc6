#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace specharness::testkit {

enum class TypeTag { Bool, Char, Int32, Int64, Float64, Str, NullRef, Array };

// Concrete Java-domain type. Arrays are one-dimensional with a scalar
// element type.
struct ValueType {
  TypeTag tag = TypeTag::Int32;
  TypeTag elem = TypeTag::Int32;  // meaningful iff tag == Array

  bool is_array() const { return tag == TypeTag::Array; }
  bool operator==(const ValueType&) const = default;
};

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical spellings: bool, char, int32, int64, float64, string, null,
// and `<elem>[]` for arrays. Java spellings (boolean, int, long, double,
// String) are accepted as aliases on input.
std::string type_to_string(const ValueType& t);
ValueType type_from_string(const std::string& s);
std::string java_type_name(const ValueType& t);

class Value {
 public:
  struct Null {
    bool operator==(const Null&) const = default;
  };
  struct Array {
    TypeTag elem = TypeTag::Int32;
    std::vector<Value> elems;
  };
  using Rep = std::variant<bool, std::uint16_t, std::int32_t, std::int64_t,
                           double, std::string, Null, Array>;

  Value() : rep_(Null{}) {}

  static Value boolean(bool v) { return Value(Rep(v)); }
  static Value character(std::uint16_t codePoint) { return Value(Rep(codePoint)); }
  static Value int32(std::int32_t v) { return Value(Rep(v)); }
  static Value int64(std::int64_t v) { return Value(Rep(v)); }
  static Value float64(double v) { return Value(Rep(v)); }
  static Value str(std::string v) { return Value(Rep(std::move(v))); }
  static Value null() { return Value(Rep(Null{})); }
  static Value array(TypeTag elem, std::vector<Value> elems);

  TypeTag tag() const;
  ValueType type() const;

  bool as_bool() const { return std::get<bool>(rep_); }
  std::uint16_t as_char() const { return std::get<std::uint16_t>(rep_); }
  std::int32_t as_int32() const { return std::get<std::int32_t>(rep_); }
  std::int64_t as_int64() const { return std::get<std::int64_t>(rep_); }
  double as_float64() const { return std::get<double>(rep_); }
  const std::string& as_str() const { return std::get<std::string>(rep_); }
  const Array& as_array() const { return std::get<Array>(rep_); }

  bool is_null() const { return std::holds_alternative<Null>(rep_); }

  const Rep& rep() const { return rep_; }

 private:
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Structural equality. Floats compare bit-for-bit (NaN equals NaN; +0.0
// differs from -0.0), which is what mutant distinctness needs.
bool structurally_equal(const Value& a, const Value& b);

// Tagged-object JSON encoding: {"t":"int32","v":5}; chars as code points;
// arrays as {"t":"array","elem":"int32","v":[...]} with plain element values.
nlohmann::ordered_json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

// Java source literal, e.g. 'b', "s", 3L, 2.5, new int[]{1, 2}.
std::string java_literal(const Value& v);

// Compact single-line rendering for logs and observations.
std::string to_display(const Value& v);

}  // namespace specharness::testkit
