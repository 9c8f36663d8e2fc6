#include "specharness/testkit/mutate.hpp"

#include <cctype>
#include <cmath>
#include <random>

namespace specharness::testkit {

namespace {

std::int32_t wrap32(std::int64_t v) { return static_cast<std::int32_t>(v); }

bool push_candidate(std::vector<Value>& out, const Value& original, Value candidate,
                    std::size_t k) {
  if (out.size() >= k) {
    return false;
  }
  if (structurally_equal(candidate, original)) {
    return true;
  }
  for (const auto& existing : out) {
    if (structurally_equal(existing, candidate)) {
      return true;
    }
  }
  out.push_back(std::move(candidate));
  return true;
}

// Deterministic per-value stream for extra numeric mutants beyond the
// configured deltas.
std::mt19937_64 value_rng(std::uint64_t seed, const Value& o) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (char c : value_to_json(o).dump()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(h);
}

std::uint16_t flip_case(std::uint16_t cp) {
  if (cp >= 'a' && cp <= 'z') return static_cast<std::uint16_t>(cp - 'a' + 'A');
  if (cp >= 'A' && cp <= 'Z') return static_cast<std::uint16_t>(cp - 'A' + 'a');
  return cp;
}

Value zero_of(TypeTag tag) {
  switch (tag) {
    case TypeTag::Bool: return Value::boolean(false);
    case TypeTag::Char: return Value::character('a');
    case TypeTag::Int32: return Value::int32(0);
    case TypeTag::Int64: return Value::int64(0);
    case TypeTag::Float64: return Value::float64(0.0);
    case TypeTag::Str: return Value::str("");
    default: return Value::null();
  }
}

void mutate_int32(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  std::int64_t v = o.as_int32();
  for (const auto& m : cfg.integerDeltas) {
    std::int64_t candidate;
    switch (m.kind) {
      case IntMutation::Kind::Offset: candidate = v + m.delta; break;
      case IntMutation::Kind::FarJump: candidate = v + 2 * std::llabs(v) + 1; break;
      case IntMutation::Kind::SignFlip: candidate = -v; break;
    }
    push_candidate(out, o, Value::int32(wrap32(candidate)), cfg.mutantsPerOutput);
  }
  if (!cfg.integerDeltas.empty() && out.size() < cfg.mutantsPerOutput) {
    auto rng = value_rng(cfg.seed, o);
    for (int attempt = 0; attempt < 64 && out.size() < cfg.mutantsPerOutput; ++attempt) {
      std::int64_t d = static_cast<std::int64_t>(rng() % 1000) + 2;
      push_candidate(out, o, Value::int32(wrap32(v + d)), cfg.mutantsPerOutput);
      push_candidate(out, o, Value::int32(wrap32(v - d)), cfg.mutantsPerOutput);
    }
  }
}

void mutate_int64(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  std::int64_t v = o.as_int64();
  for (const auto& m : cfg.integerDeltas) {
    std::int64_t candidate;
    switch (m.kind) {
      case IntMutation::Kind::Offset:
        candidate = static_cast<std::int64_t>(static_cast<std::uint64_t>(v) +
                                              static_cast<std::uint64_t>(m.delta));
        break;
      case IntMutation::Kind::FarJump: {
        std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1
                                  : static_cast<std::uint64_t>(v);
        candidate =
            static_cast<std::int64_t>(static_cast<std::uint64_t>(v) + 2 * mag + 1);
        break;
      }
      case IntMutation::Kind::SignFlip:
        candidate = v == INT64_MIN ? INT64_MIN : -v;
        break;
    }
    push_candidate(out, o, Value::int64(candidate), cfg.mutantsPerOutput);
  }
  if (!cfg.integerDeltas.empty() && out.size() < cfg.mutantsPerOutput) {
    auto rng = value_rng(cfg.seed, o);
    for (int attempt = 0; attempt < 64 && out.size() < cfg.mutantsPerOutput; ++attempt) {
      std::int64_t d = static_cast<std::int64_t>(rng() % 1000) + 2;
      push_candidate(out, o,
                     Value::int64(static_cast<std::int64_t>(
                         static_cast<std::uint64_t>(v) + static_cast<std::uint64_t>(d))),
                     cfg.mutantsPerOutput);
    }
  }
}

void mutate_char(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  std::uint16_t cp = o.as_char();
  for (const auto& m : cfg.charDeltas) {
    std::uint16_t candidate;
    if (m.kind == CharMutation::Kind::CaseFlip) {
      candidate = flip_case(cp);
    } else {
      candidate = static_cast<std::uint16_t>(static_cast<std::int32_t>(cp) + m.delta);
    }
    push_candidate(out, o, Value::character(candidate), cfg.mutantsPerOutput);
  }
  if (!cfg.charDeltas.empty() && out.size() < cfg.mutantsPerOutput) {
    auto rng = value_rng(cfg.seed, o);
    for (int attempt = 0; attempt < 64 && out.size() < cfg.mutantsPerOutput; ++attempt) {
      std::uint16_t d = static_cast<std::uint16_t>(rng() % 96 + 2);
      push_candidate(out, o, Value::character(static_cast<std::uint16_t>(cp + d)),
                     cfg.mutantsPerOutput);
    }
  }
}

void mutate_float(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  double v = o.as_float64();
  for (const auto& m : cfg.floatFactors) {
    double candidate =
        m.kind == FloatMutation::Kind::Scale ? v * m.value : v + m.value;
    push_candidate(out, o, Value::float64(candidate), cfg.mutantsPerOutput);
  }
  if (!cfg.floatFactors.empty() && out.size() < cfg.mutantsPerOutput &&
      std::isfinite(v)) {
    auto rng = value_rng(cfg.seed, o);
    for (int attempt = 0; attempt < 64 && out.size() < cfg.mutantsPerOutput; ++attempt) {
      double d = static_cast<double>(rng() % 1000 + 2) / 4.0;
      push_candidate(out, o, Value::float64(v + d), cfg.mutantsPerOutput);
    }
  }
}

void mutate_string(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  const std::string& s = o.as_str();
  auto apply = [&](StringOp op, int variant) {
    if (!cfg.stringOps.contains(op)) {
      return;
    }
    switch (op) {
      case StringOp::FlipCase: {
        if (variant > 0) return;
        std::string t = s;
        for (char& c : t) {
          if (std::isupper(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          } else if (std::islower(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          }
        }
        push_candidate(out, o, Value::str(t), cfg.mutantsPerOutput);
        return;
      }
      case StringOp::DropChar: {
        if (s.empty()) return;
        // variant 0 drops the last char, variant 1 the first.
        std::string t = variant == 0 ? s.substr(0, s.size() - 1) : s.substr(1);
        push_candidate(out, o, Value::str(t), cfg.mutantsPerOutput);
        return;
      }
      case StringOp::AppendChar: {
        static const char extras[] = {'x', 'X', '_', '0'};
        if (variant >= static_cast<int>(sizeof extras)) return;
        push_candidate(out, o, Value::str(s + extras[variant]), cfg.mutantsPerOutput);
        return;
      }
    }
  };
  for (int variant = 0; variant < 4 && out.size() < cfg.mutantsPerOutput; ++variant) {
    apply(StringOp::FlipCase, variant);
    apply(StringOp::DropChar, variant);
    apply(StringOp::AppendChar, variant);
  }
}

void mutate_array(const Value& o, const MutationConfig& cfg, std::vector<Value>& out) {
  const auto& arr = o.as_array();
  const auto& elems = arr.elems;

  auto perturbed = [&](std::size_t at) -> std::optional<Value> {
    MutationConfig elemCfg = cfg;
    elemCfg.mutantsPerOutput = 1;
    try {
      auto ms = mutate_output(elems[at], elemCfg);
      if (ms.empty()) return std::nullopt;
      std::vector<Value> copy = elems;
      copy[at] = ms[0];
      return Value::array(arr.elem, std::move(copy));
    } catch (const UnmutableError&) {
      return std::nullopt;
    }
  };

  auto apply = [&](ArrayOp op, int variant) {
    if (!cfg.arrayOps.contains(op)) {
      return;
    }
    switch (op) {
      case ArrayOp::DeleteElement: {
        if (elems.empty()) return;
        std::vector<Value> copy = elems;
        if (variant == 0) {
          copy.pop_back();
        } else if (variant == 1) {
          copy.erase(copy.begin());
        } else {
          return;
        }
        push_candidate(out, o, Value::array(arr.elem, std::move(copy)),
                       cfg.mutantsPerOutput);
        return;
      }
      case ArrayOp::InsertElement: {
        std::vector<Value> copy = elems;
        if (variant == 0) {
          copy.push_back(zero_of(arr.elem));
        } else if (variant == 1) {
          copy.insert(copy.begin(), zero_of(arr.elem));
        } else {
          return;
        }
        push_candidate(out, o, Value::array(arr.elem, std::move(copy)),
                       cfg.mutantsPerOutput);
        return;
      }
      case ArrayOp::PerturbElement: {
        if (elems.empty()) return;
        std::size_t at = variant == 0 ? 0 : elems.size() - 1;
        if (variant > 1) return;
        if (auto v = perturbed(at)) {
          push_candidate(out, o, std::move(*v), cfg.mutantsPerOutput);
        }
        return;
      }
      case ArrayOp::SwapAdjacent: {
        if (variant > 0) return;
        for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
          if (!structurally_equal(elems[i], elems[i + 1])) {
            std::vector<Value> copy = elems;
            std::swap(copy[i], copy[i + 1]);
            push_candidate(out, o, Value::array(arr.elem, std::move(copy)),
                           cfg.mutantsPerOutput);
            return;
          }
        }
        return;
      }
    }
  };
  for (int variant = 0; variant < 2 && out.size() < cfg.mutantsPerOutput; ++variant) {
    apply(ArrayOp::DeleteElement, variant);
    apply(ArrayOp::InsertElement, variant);
    apply(ArrayOp::PerturbElement, variant);
    apply(ArrayOp::SwapAdjacent, variant);
  }
}

}  // namespace

std::vector<Value> mutate_output(const Value& o, const MutationConfig& cfg) {
  if (cfg.mutantsPerOutput < 1) {
    throw UnmutableError("mutantsPerOutput must be at least 1");
  }
  std::vector<Value> out;
  switch (o.tag()) {
    case TypeTag::Bool:
      push_candidate(out, o, Value::boolean(!o.as_bool()), cfg.mutantsPerOutput);
      break;
    case TypeTag::Char:
      if (cfg.charDeltas.empty()) {
        throw UnmutableError("no char mutation operators configured");
      }
      mutate_char(o, cfg, out);
      break;
    case TypeTag::Int32:
      if (cfg.integerDeltas.empty()) {
        throw UnmutableError("no integer mutation operators configured");
      }
      mutate_int32(o, cfg, out);
      break;
    case TypeTag::Int64:
      if (cfg.integerDeltas.empty()) {
        throw UnmutableError("no integer mutation operators configured");
      }
      mutate_int64(o, cfg, out);
      break;
    case TypeTag::Float64:
      if (cfg.floatFactors.empty()) {
        throw UnmutableError("no float mutation operators configured");
      }
      mutate_float(o, cfg, out);
      break;
    case TypeTag::Str:
      if (cfg.stringOps.empty()) {
        throw UnmutableError("no string mutation operators configured");
      }
      mutate_string(o, cfg, out);
      break;
    case TypeTag::Array:
      if (cfg.arrayOps.empty()) {
        throw UnmutableError("no array mutation operators configured");
      }
      mutate_array(o, cfg, out);
      break;
    case TypeTag::NullRef:
      throw UnmutableError("null outputs cannot be mutated");
  }
  if (out.empty()) {
    throw UnmutableError("no operator produced a value distinct from " +
                         to_display(o));
  }
  return out;
}

MutantPool build_mutant_pool(const TestSuite& suite, const MutationConfig& cfg) {
  MutantPool pool;
  for (std::size_t i = 0; i < suite.validPairs.size(); ++i) {
    try {
      for (auto& m : mutate_output(suite.validPairs[i].output, cfg)) {
        pool.entries.push_back({i, std::move(m)});
      }
    } catch (const UnmutableError& e) {
      pool.warnings.push_back("pair " + std::to_string(i) + " skipped: " + e.what());
    }
  }
  return pool;
}

namespace {

nlohmann::ordered_json int_mutations_to_json(const std::vector<IntMutation>& ms) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : ms) {
    switch (m.kind) {
      case IntMutation::Kind::Offset: arr.push_back(m.delta); break;
      case IntMutation::Kind::FarJump: arr.push_back("far"); break;
      case IntMutation::Kind::SignFlip: arr.push_back("negate"); break;
    }
  }
  return arr;
}

std::vector<IntMutation> int_mutations_from_json(const nlohmann::json& j) {
  std::vector<IntMutation> out;
  for (const auto& item : j) {
    if (item.is_number_integer()) {
      out.push_back({IntMutation::Kind::Offset, item.get<std::int64_t>()});
    } else if (item == "far") {
      out.push_back({IntMutation::Kind::FarJump, 0});
    } else if (item == "negate") {
      out.push_back({IntMutation::Kind::SignFlip, 0});
    } else {
      throw TypeError("bad integer mutation: " + item.dump());
    }
  }
  return out;
}

}  // namespace

nlohmann::ordered_json mutation_config_to_json(const MutationConfig& cfg) {
  nlohmann::ordered_json j;
  j["k"] = cfg.mutantsPerOutput;
  j["integerDeltas"] = int_mutations_to_json(cfg.integerDeltas);
  auto chars = nlohmann::ordered_json::array();
  for (const auto& m : cfg.charDeltas) {
    if (m.kind == CharMutation::Kind::CaseFlip) {
      chars.push_back("caseflip");
    } else {
      chars.push_back(m.delta);
    }
  }
  j["charDeltas"] = std::move(chars);
  auto floats = nlohmann::ordered_json::array();
  for (const auto& m : cfg.floatFactors) {
    floats.push_back((m.kind == FloatMutation::Kind::Scale ? "*" : "+") +
                     std::to_string(m.value));
  }
  j["floatFactors"] = std::move(floats);
  auto arrays = nlohmann::ordered_json::array();
  for (ArrayOp op : cfg.arrayOps) {
    switch (op) {
      case ArrayOp::InsertElement: arrays.push_back("insert"); break;
      case ArrayOp::DeleteElement: arrays.push_back("delete"); break;
      case ArrayOp::PerturbElement: arrays.push_back("perturb"); break;
      case ArrayOp::SwapAdjacent: arrays.push_back("swap"); break;
    }
  }
  j["arrayOps"] = std::move(arrays);
  auto strings = nlohmann::ordered_json::array();
  for (StringOp op : cfg.stringOps) {
    switch (op) {
      case StringOp::FlipCase: strings.push_back("flipcase"); break;
      case StringOp::DropChar: strings.push_back("drop"); break;
      case StringOp::AppendChar: strings.push_back("append"); break;
    }
  }
  j["stringOps"] = std::move(strings);
  j["seed"] = cfg.seed;
  return j;
}

MutationConfig mutation_config_from_json(const nlohmann::json& j) {
  MutationConfig cfg;
  if (j.contains("k")) cfg.mutantsPerOutput = j.at("k").get<std::size_t>();
  if (j.contains("integerDeltas")) {
    cfg.integerDeltas = int_mutations_from_json(j.at("integerDeltas"));
  }
  if (j.contains("charDeltas")) {
    cfg.charDeltas.clear();
    for (const auto& item : j.at("charDeltas")) {
      if (item == "caseflip") {
        cfg.charDeltas.push_back({CharMutation::Kind::CaseFlip, 0});
      } else if (item.is_number_integer()) {
        cfg.charDeltas.push_back({CharMutation::Kind::Offset, item.get<std::int32_t>()});
      } else {
        throw TypeError("bad char mutation: " + item.dump());
      }
    }
  }
  if (j.contains("floatFactors")) {
    cfg.floatFactors.clear();
    for (const auto& item : j.at("floatFactors")) {
      std::string s = item.get<std::string>();
      if (s.empty() || (s[0] != '*' && s[0] != '+')) {
        throw TypeError("bad float mutation: " + s);
      }
      FloatMutation m;
      m.kind = s[0] == '*' ? FloatMutation::Kind::Scale : FloatMutation::Kind::Offset;
      m.value = std::stod(s.substr(1));
      cfg.floatFactors.push_back(m);
    }
  }
  if (j.contains("arrayOps")) {
    cfg.arrayOps.clear();
    for (const auto& item : j.at("arrayOps")) {
      std::string s = item.get<std::string>();
      if (s == "insert") cfg.arrayOps.insert(ArrayOp::InsertElement);
      else if (s == "delete") cfg.arrayOps.insert(ArrayOp::DeleteElement);
      else if (s == "perturb") cfg.arrayOps.insert(ArrayOp::PerturbElement);
      else if (s == "swap") cfg.arrayOps.insert(ArrayOp::SwapAdjacent);
      else throw TypeError("bad array op: " + s);
    }
  }
  if (j.contains("stringOps")) {
    cfg.stringOps.clear();
    for (const auto& item : j.at("stringOps")) {
      std::string s = item.get<std::string>();
      if (s == "flipcase") cfg.stringOps.insert(StringOp::FlipCase);
      else if (s == "drop") cfg.stringOps.insert(StringOp::DropChar);
      else if (s == "append") cfg.stringOps.insert(StringOp::AppendChar);
      else throw TypeError("bad string op: " + s);
    }
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

}  // namespace specharness::testkit
