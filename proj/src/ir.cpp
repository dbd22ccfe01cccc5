#include "jaxpr2py/ir.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "jaxpr2py/errors.hpp"

namespace jaxpr2py {

namespace {

constexpr std::array<std::pair<std::string_view, DType>, 13> kDTypeNames = {{
    {"f16", DType::f16},
    {"bf16", DType::bf16},
    {"f32", DType::f32},
    {"f64", DType::f64},
    {"i8", DType::i8},
    {"i16", DType::i16},
    {"i32", DType::i32},
    {"i64", DType::i64},
    {"u8", DType::u8},
    {"u16", DType::u16},
    {"u32", DType::u32},
    {"u64", DType::u64},
    {"bool", DType::boolean},
}};

std::string describe(SourcePos pos, const std::string& message) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " +
         message;
}

}  // namespace

LexError::LexError(const std::string& message, SourcePos pos)
    : DecompileError(describe(pos, message)), pos_(pos) {}

ParseError::ParseError(const std::string& message, SourcePos pos,
                       std::vector<std::string> expected)
    : DecompileError(describe(pos, message)),
      pos_(pos),
      expected_(std::move(expected)) {}

TranslationError::TranslationError(std::string primitive,
                                   const std::string& message)
    : DecompileError(message), primitive_(std::move(primitive)) {}

UnknownOperator::UnknownOperator(const std::string& primitive)
    : TranslationError(primitive,
                       "unknown Jaxpr operator '" + primitive +
                           "': no translation rule is registered") {}

UnknownOperator::UnknownOperator(const std::string& primitive,
                                 const std::string& detail)
    : TranslationError(primitive,
                       "unsupported Jaxpr operator '" + primitive + "': " +
                           detail) {}

std::optional<DType> dtype_from_string(std::string_view text) {
  for (const auto& [name, dtype] : kDTypeNames) {
    if (name == text) return dtype;
  }
  return std::nullopt;
}

std::string_view to_string(DType dtype) {
  for (const auto& [name, d] : kDTypeNames) {
    if (d == dtype) return name;
  }
  return "?";
}

Literal Literal::integer(std::int64_t v, std::string text) {
  return Literal{Kind::integer, v, std::move(text), std::nullopt};
}

Literal Literal::floating(double v, std::string text) {
  return Literal{Kind::floating, v, std::move(text), std::nullopt};
}

Literal Literal::boolean(bool v) {
  return Literal{Kind::boolean, v, v ? "True" : "False", std::nullopt};
}

bool Literal::is_special_float() const {
  if (kind != Kind::floating) return false;
  const double v = std::get<double>(value);
  return std::isinf(v) || std::isnan(v);
}

bool Literal::is_negative() const {
  return !source_text.empty() && source_text.front() == '-';
}

bool operator==(const Literal& a, const Literal& b) {
  // Compared by spelling so that nan literals are equal to themselves.
  return a.kind == b.kind && a.source_text == b.source_text && a.type == b.type;
}

Binder Binder::named(std::string name, std::optional<ShapedType> type) {
  return Binder{std::move(name), std::move(type), false};
}

Binder Binder::drop(std::optional<ShapedType> type) {
  return Binder{"_", std::move(type), true};
}

bool operator==(const ParamValue& a, const ParamValue& b) {
  return a.value == b.value;
}

bool operator==(const NestedProgram& a, const NestedProgram& b) {
  if (a.program == b.program) return true;
  if (!a.program || !b.program) return false;
  return *a.program == *b.program;
}

const ParamValue* Equation::param(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::size_t nesting_depth(const ParamValue& value) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamTuple>) {
          std::size_t inner = 0;
          for (const auto& item : v.items) {
            inner = std::max(inner, nesting_depth(item));
          }
          return inner + 1;
        } else if constexpr (std::is_same_v<T, ParamCall>) {
          std::size_t inner = 0;
          for (const auto& arg : v.args) {
            inner = std::max(inner, nesting_depth(arg));
          }
          return inner + 1;
        } else if constexpr (std::is_same_v<T, NestedProgram>) {
          return 1;
        } else {
          return 0;
        }
      },
      value.value);
}

namespace {

void validate_scope(const Program& program, const std::string& where,
                    std::vector<Violation>& out);

void validate_params(const ParamValue& value, std::size_t eq_index,
                     const std::string& where, std::vector<Violation>& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamTuple>) {
          for (const auto& item : v.items) {
            validate_params(item, eq_index, where, out);
          }
        } else if constexpr (std::is_same_v<T, ParamCall>) {
          for (const auto& arg : v.args) {
            validate_params(arg, eq_index, where, out);
          }
        } else if constexpr (std::is_same_v<T, NestedProgram>) {
          std::vector<Violation> nested;
          validate_scope(*v.program, "", nested);
          for (auto& violation : nested) {
            out.push_back(Violation{
                eq_index, "in nested program" + where + ": " +
                              violation.message});
          }
        }
      },
      value.value);
}

void validate_scope(const Program& program, const std::string& where,
                    std::vector<Violation>& out) {
  std::unordered_set<std::string> bound;

  auto bind = [&](const Binder& binder, std::optional<std::size_t> index) {
    if (binder.dropped) return;
    if (!bound.insert(binder.name).second) {
      std::string message = "duplicate binder " + binder.name;
      if (index) message += " at equation " + std::to_string(*index);
      out.push_back(Violation{index, message + where});
    }
  };

  auto check_atom = [&](const Atom& atom, std::optional<std::size_t> index) {
    if (!atom.is_var()) return;
    const std::string& name = atom.var_name();
    if (name == "_") {
      std::string message = "dropped binder _ is referenced";
      if (index) message += " at equation " + std::to_string(*index);
      out.push_back(Violation{index, message + where});
      return;
    }
    if (bound.count(name) == 0) {
      std::string message = "undefined variable " + name;
      message += index ? " at equation " + std::to_string(*index)
                       : std::string(" in outputs");
      out.push_back(Violation{index, message + where});
    }
  };

  for (const auto& binder : program.constvars) bind(binder, std::nullopt);
  for (const auto& binder : program.invars) bind(binder, std::nullopt);

  for (std::size_t k = 0; k < program.equations.size(); ++k) {
    const Equation& eq = program.equations[k];
    if (eq.primitive.empty()) {
      out.push_back(Violation{k, "empty primitive name at equation " +
                                     std::to_string(k) + where});
    }
    for (const auto& atom : eq.inputs) check_atom(atom, k);
    for (const auto& [key, value] : eq.params) {
      validate_params(value, k, " (param " + key + ")", out);
    }
    for (const auto& binder : eq.outputs) bind(binder, k);
  }
  for (const auto& atom : program.outputs) check_atom(atom, std::nullopt);
}

}  // namespace

ValidationResult validate(const Program& program) {
  ValidationResult result;
  validate_scope(program, "", result.violations);
  return result;
}

}  // namespace jaxpr2py
