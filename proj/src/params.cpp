#include "jaxpr2py/params.hpp"

#include <map>

#include "jaxpr2py/errors.hpp"

namespace jaxpr2py {

namespace {

[[noreturn]] void bad_param(const Equation& eq, const std::string& key,
                            const std::string& what) {
  throw TranslationError(eq.primitive, "parameter '" + key + "' of '" +
                                           eq.primitive + "' " + what);
}

const std::map<std::string, DType, std::less<>>& dtype_symbols() {
  static const std::map<std::string, DType, std::less<>> table = {
      {"float16", DType::f16}, {"bfloat16", DType::bf16},
      {"float32", DType::f32}, {"float64", DType::f64},
      {"int8", DType::i8},     {"int16", DType::i16},
      {"int32", DType::i32},   {"int64", DType::i64},
      {"uint8", DType::u8},    {"uint16", DType::u16},
      {"uint32", DType::u32},  {"uint64", DType::u64},
      {"bool", DType::boolean},
  };
  return table;
}

bool is_lax_qualified(const std::string& name) {
  static const char* const prefixes[] = {
      "GatherScatterMode.", "RoundingMethod.", "GatherDimensionNumbers",
      "ScatterDimensionNumbers", "ConvDimensionNumbers", "Precision."};
  for (const char* p : prefixes) {
    if (name.rfind(p, 0) == 0) return true;
  }
  return false;
}

}  // namespace

const ParamValue& require_param(const Equation& eq, const std::string& key) {
  const ParamValue* v = eq.param(key);
  if (!v) {
    throw TranslationError(eq.primitive, "'" + eq.primitive +
                                             "' is missing parameter '" + key +
                                             "'");
  }
  return *v;
}

std::optional<std::int64_t> as_int(const ParamValue& value) {
  if (const auto* lit = std::get_if<Literal>(&value.value)) {
    if (lit->kind == Literal::Kind::integer) {
      return std::get<std::int64_t>(lit->value);
    }
    return std::nullopt;
  }
  if (const auto* call = std::get_if<ParamCall>(&value.value)) {
    const bool numpy_scalar = call->callee.rfind("np.int", 0) == 0 ||
                              call->callee.rfind("np.uint", 0) == 0;
    if (numpy_scalar && call->args.size() == 1) return as_int(call->args[0]);
  }
  return std::nullopt;
}

std::optional<std::vector<std::int64_t>> as_ints(const ParamValue& value) {
  const auto* tuple = std::get_if<ParamTuple>(&value.value);
  if (!tuple) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& item : tuple->items) {
    auto v = as_int(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::int64_t param_int(const Equation& eq, const std::string& key) {
  auto v = as_int(require_param(eq, key));
  if (!v) bad_param(eq, key, "is not an integer");
  return *v;
}

std::optional<std::int64_t> param_int_opt(const Equation& eq,
                                          const std::string& key) {
  if (!eq.param(key) || param_is_none(eq, key)) return std::nullopt;
  return param_int(eq, key);
}

bool param_bool(const Equation& eq, const std::string& key, bool fallback) {
  const ParamValue* v = eq.param(key);
  if (!v) return fallback;
  if (const auto* lit = std::get_if<Literal>(&v->value)) {
    if (lit->kind == Literal::Kind::boolean) return std::get<bool>(lit->value);
  }
  bad_param(eq, key, "is not a boolean");
}

std::vector<std::int64_t> param_ints(const Equation& eq,
                                     const std::string& key) {
  auto v = as_ints(require_param(eq, key));
  if (!v) bad_param(eq, key, "is not an integer tuple");
  return *v;
}

std::optional<std::vector<std::int64_t>> param_ints_opt(
    const Equation& eq, const std::string& key) {
  if (!eq.param(key) || param_is_none(eq, key)) return std::nullopt;
  return param_ints(eq, key);
}

std::string param_symbol(const Equation& eq, const std::string& key) {
  const ParamValue* v = eq.param(key);
  if (!v) return {};
  if (const auto* sym = std::get_if<ParamSymbol>(&v->value)) return sym->text;
  bad_param(eq, key, "is not a symbol");
}

bool param_is_none(const Equation& eq, const std::string& key) {
  const ParamValue* v = eq.param(key);
  if (!v) return false;
  const auto* sym = std::get_if<ParamSymbol>(&v->value);
  return sym && sym->text == "None";
}

const ParamValue* call_arg(const ParamCall& call, const std::string& key) {
  for (std::size_t i = 0; i < call.keys.size(); ++i) {
    if (call.keys[i] == key) return &call.args[i];
  }
  return nullptr;
}

std::string dtype_name(const Equation& eq, DType dtype, bool framework) {
  switch (dtype) {
    case DType::f16: return "float16";
    case DType::bf16:
      if (!framework) {
        throw UnknownOperator(eq.primitive,
                              "bfloat16 has no plain numpy equivalent");
      }
      return "bfloat16";
    case DType::f32: return "float32";
    case DType::f64: return "float64";
    case DType::i8: return "int8";
    case DType::i16: return "int16";
    case DType::i32: return "int32";
    case DType::i64: return "int64";
    case DType::u8: return "uint8";
    case DType::u16: return "uint16";
    case DType::u32: return "uint32";
    case DType::u64: return "uint64";
    case DType::boolean: return "bool_";
  }
  return "float32";
}

std::string dtype_name(const Equation& eq, const std::string& symbol,
                       bool framework) {
  auto it = dtype_symbols().find(symbol);
  if (it == dtype_symbols().end()) {
    throw TranslationError(eq.primitive, "'" + eq.primitive +
                                             "' uses unsupported dtype '" +
                                             symbol + "'");
  }
  return dtype_name(eq, it->second, framework);
}

std::string int_tuple(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  if (values.size() == 1) out += ",";
  return out + ")";
}

std::string render_lax_value(const Equation& eq, const ParamValue& value) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return v.source_text;
        } else if constexpr (std::is_same_v<T, ParamSymbol>) {
          if (v.text == "None" || v.text == "True" || v.text == "False") {
            return v.text;
          }
          if (dtype_symbols().count(v.text)) return "\"" + v.text + "\"";
          if (is_lax_qualified(v.text)) return "lax." + v.text;
          throw TranslationError(eq.primitive, "cannot render parameter value '" +
                                                   v.text + "' of '" +
                                                   eq.primitive + "'");
        } else if constexpr (std::is_same_v<T, ParamTuple>) {
          std::string out = v.square ? "[" : "(";
          for (std::size_t i = 0; i < v.items.size(); ++i) {
            if (i) out += ", ";
            out += render_lax_value(eq, v.items[i]);
          }
          if (!v.square && v.items.size() == 1) out += ",";
          return out + (v.square ? "]" : ")");
        } else if constexpr (std::is_same_v<T, ParamCall>) {
          if (auto n = as_int(value)) return std::to_string(*n);
          if (!is_lax_qualified(v.callee)) {
            throw TranslationError(eq.primitive, "cannot render parameter value '" +
                                                     v.callee + "(...)' of '" +
                                                     eq.primitive + "'");
          }
          std::string out = "lax." + v.callee + "(";
          for (std::size_t i = 0; i < v.args.size(); ++i) {
            if (i) out += ", ";
            if (!v.keys[i].empty()) out += v.keys[i] + "=";
            out += render_lax_value(eq, v.args[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, ParamOpaque>) {
          throw TranslationError(eq.primitive, "cannot render opaque parameter " +
                                                   v.text + " of '" +
                                                   eq.primitive + "'");
        } else {
          throw TranslationError(eq.primitive,
                                 "nested program cannot be passed as a value");
        }
      },
      value.value);
}

}  // namespace jaxpr2py
