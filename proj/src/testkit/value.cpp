#include "specharness/testkit/value.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace specharness::testkit {

namespace {

const char* scalar_name(TypeTag t) {
  switch (t) {
    case TypeTag::Bool: return "bool";
    case TypeTag::Char: return "char";
    case TypeTag::Int32: return "int32";
    case TypeTag::Int64: return "int64";
    case TypeTag::Float64: return "float64";
    case TypeTag::Str: return "string";
    case TypeTag::NullRef: return "null";
    case TypeTag::Array: return "array";
  }
  return "?";
}

TypeTag scalar_from_name(const std::string& s) {
  if (s == "bool" || s == "boolean") return TypeTag::Bool;
  if (s == "char") return TypeTag::Char;
  if (s == "int32" || s == "int") return TypeTag::Int32;
  if (s == "int64" || s == "long") return TypeTag::Int64;
  if (s == "float64" || s == "double" || s == "float") return TypeTag::Float64;
  if (s == "string" || s == "String" || s == "java.lang.String") return TypeTag::Str;
  if (s == "null") return TypeTag::NullRef;
  throw TypeError("unknown type name: " + s);
}

std::string double_text(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace

std::string type_to_string(const ValueType& t) {
  if (t.tag == TypeTag::Array) {
    return std::string(scalar_name(t.elem)) + "[]";
  }
  return scalar_name(t.tag);
}

ValueType type_from_string(const std::string& s) {
  if (s.size() > 2 && s.ends_with("[]")) {
    ValueType t;
    t.tag = TypeTag::Array;
    t.elem = scalar_from_name(s.substr(0, s.size() - 2));
    if (t.elem == TypeTag::Array || t.elem == TypeTag::NullRef) {
      throw TypeError("unsupported array element type in: " + s);
    }
    return t;
  }
  ValueType t;
  t.tag = scalar_from_name(s);
  return t;
}

std::string java_type_name(const ValueType& t) {
  auto javaScalar = [](TypeTag tag) -> std::string {
    switch (tag) {
      case TypeTag::Bool: return "boolean";
      case TypeTag::Char: return "char";
      case TypeTag::Int32: return "int";
      case TypeTag::Int64: return "long";
      case TypeTag::Float64: return "double";
      case TypeTag::Str: return "String";
      default: return "Object";
    }
  };
  if (t.tag == TypeTag::Array) {
    return javaScalar(t.elem) + "[]";
  }
  return javaScalar(t.tag);
}

Value Value::array(TypeTag elem, std::vector<Value> elems) {
  for (const auto& e : elems) {
    if (e.tag() != elem) {
      throw TypeError("array element type mismatch: expected " +
                      std::string(scalar_name(elem)) + ", got " +
                      std::string(scalar_name(e.tag())));
    }
  }
  return Value(Rep(Array{elem, std::move(elems)}));
}

TypeTag Value::tag() const {
  switch (rep_.index()) {
    case 0: return TypeTag::Bool;
    case 1: return TypeTag::Char;
    case 2: return TypeTag::Int32;
    case 3: return TypeTag::Int64;
    case 4: return TypeTag::Float64;
    case 5: return TypeTag::Str;
    case 6: return TypeTag::NullRef;
    default: return TypeTag::Array;
  }
}

ValueType Value::type() const {
  ValueType t;
  t.tag = tag();
  if (t.tag == TypeTag::Array) {
    t.elem = as_array().elem;
  }
  return t;
}

bool structurally_equal(const Value& a, const Value& b) {
  if (a.tag() != b.tag()) {
    return false;
  }
  switch (a.tag()) {
    case TypeTag::Bool: return a.as_bool() == b.as_bool();
    case TypeTag::Char: return a.as_char() == b.as_char();
    case TypeTag::Int32: return a.as_int32() == b.as_int32();
    case TypeTag::Int64: return a.as_int64() == b.as_int64();
    case TypeTag::Float64:
      return std::bit_cast<std::uint64_t>(a.as_float64()) ==
             std::bit_cast<std::uint64_t>(b.as_float64());
    case TypeTag::Str: return a.as_str() == b.as_str();
    case TypeTag::NullRef: return true;
    case TypeTag::Array: {
      const auto& x = a.as_array();
      const auto& y = b.as_array();
      if (x.elem != y.elem || x.elems.size() != y.elems.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.elems.size(); ++i) {
        if (!structurally_equal(x.elems[i], y.elems[i])) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

nlohmann::ordered_json value_to_json(const Value& v) {
  nlohmann::ordered_json j;
  switch (v.tag()) {
    case TypeTag::Bool:
      j["t"] = "bool";
      j["v"] = v.as_bool();
      break;
    case TypeTag::Char:
      j["t"] = "char";
      j["v"] = v.as_char();
      break;
    case TypeTag::Int32:
      j["t"] = "int32";
      j["v"] = v.as_int32();
      break;
    case TypeTag::Int64:
      j["t"] = "int64";
      j["v"] = v.as_int64();
      break;
    case TypeTag::Float64: {
      double d = v.as_float64();
      j["t"] = "float64";
      if (std::isfinite(d)) {
        j["v"] = d;
      } else {
        j["v"] = double_text(d);  // "NaN", "Infinity", "-Infinity"
      }
      break;
    }
    case TypeTag::Str:
      j["t"] = "string";
      j["v"] = v.as_str();
      break;
    case TypeTag::NullRef:
      j["t"] = "null";
      break;
    case TypeTag::Array: {
      const auto& arr = v.as_array();
      j["t"] = "array";
      j["elem"] = scalar_name(arr.elem);
      auto items = nlohmann::ordered_json::array();
      for (const auto& e : arr.elems) {
        items.push_back(value_to_json(e));
      }
      j["v"] = std::move(items);
      break;
    }
  }
  return j;
}

Value value_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("t")) {
    throw TypeError("value object must carry a \"t\" tag: " + j.dump());
  }
  const std::string t = j.at("t").get<std::string>();
  if (t == "null") {
    return Value::null();
  }
  if (t == "array") {
    TypeTag elem = scalar_from_name(j.at("elem").get<std::string>());
    std::vector<Value> elems;
    for (const auto& item : j.at("v")) {
      elems.push_back(value_from_json(item));
    }
    return Value::array(elem, std::move(elems));
  }
  const auto& v = j.at("v");
  if (t == "bool") return Value::boolean(v.get<bool>());
  if (t == "char") {
    auto cp = v.get<std::int64_t>();
    if (cp < 0 || cp > 65535) {
      throw TypeError("char code point out of range: " + std::to_string(cp));
    }
    return Value::character(static_cast<std::uint16_t>(cp));
  }
  if (t == "int32") {
    auto n = v.get<std::int64_t>();
    if (n < INT32_MIN || n > INT32_MAX) {
      throw TypeError("int32 out of range: " + std::to_string(n));
    }
    return Value::int32(static_cast<std::int32_t>(n));
  }
  if (t == "int64") return Value::int64(v.get<std::int64_t>());
  if (t == "float64") {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s == "NaN") return Value::float64(std::nan(""));
      if (s == "Infinity") return Value::float64(HUGE_VAL);
      if (s == "-Infinity") return Value::float64(-HUGE_VAL);
      throw TypeError("bad float64 string: " + s);
    }
    return Value::float64(v.get<double>());
  }
  if (t == "string") return Value::str(v.get<std::string>());
  throw TypeError("unknown value tag: " + t);
}

std::string java_literal(const Value& v) {
  switch (v.tag()) {
    case TypeTag::Bool:
      return v.as_bool() ? "true" : "false";
    case TypeTag::Char: {
      std::uint16_t cp = v.as_char();
      if (cp >= 0x20 && cp <= 0x7E && cp != '\'' && cp != '\\') {
        return std::string("'") + static_cast<char>(cp) + "'";
      }
      char buf[16];
      std::snprintf(buf, sizeof buf, "'\\u%04X'", cp);
      return buf;
    }
    case TypeTag::Int32:
      return std::to_string(v.as_int32());
    case TypeTag::Int64:
      return std::to_string(v.as_int64()) + "L";
    case TypeTag::Float64: {
      double d = v.as_float64();
      if (std::isnan(d)) return "Double.NaN";
      if (std::isinf(d)) {
        return d > 0 ? "Double.POSITIVE_INFINITY" : "Double.NEGATIVE_INFINITY";
      }
      return double_text(d);
    }
    case TypeTag::Str: {
      std::string out = "\"";
      for (char c : v.as_str()) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (c == '"' || c == '\\') {
          out += '\\';
          out += c;
        } else if (uc >= 0x20 && uc <= 0x7E) {
          out += c;
        } else {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", uc);
          out += buf;
        }
      }
      out += '"';
      return out;
    }
    case TypeTag::NullRef:
      return "null";
    case TypeTag::Array: {
      const auto& arr = v.as_array();
      ValueType t;
      t.tag = TypeTag::Array;
      t.elem = arr.elem;
      std::string out = "new " + java_type_name(t) + "{";
      for (std::size_t i = 0; i < arr.elems.size(); ++i) {
        if (i > 0) out += ", ";
        out += java_literal(arr.elems[i]);
      }
      out += "}";
      return out;
    }
  }
  return "?";
}

std::string to_display(const Value& v) {
  switch (v.tag()) {
    case TypeTag::Char: {
      std::uint16_t cp = v.as_char();
      if (cp >= 0x20 && cp <= 0x7E) {
        return std::string("'") + static_cast<char>(cp) + "'";
      }
      return "char:" + std::to_string(cp);
    }
    case TypeTag::Str:
      return "\"" + v.as_str() + "\"";
    case TypeTag::Array: {
      std::string out = "[";
      const auto& arr = v.as_array();
      for (std::size_t i = 0; i < arr.elems.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_display(arr.elems[i]);
      }
      return out + "]";
    }
    default:
      return java_literal(v);
  }
}

}  // namespace specharness::testkit
