#pragma once

// In-memory model of a parsed Jaxpr program.
//
// All types are plain values; nested programs are held through
// shared_ptr<const Program> so a parsed tree is immutable and can be shared
// read-only between decompilations.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jaxpr2py {

enum class DType {
  f16,
  bf16,
  f32,
  f64,
  i8,
  i16,
  i32,
  i64,
  u8,
  u16,
  u32,
  u64,
  boolean,
};

/// Parses a short dtype spelling as printed in binder annotations ("f32",
/// "bool", ...). Returns nullopt for anything else.
std::optional<DType> dtype_from_string(std::string_view text);
std::string_view to_string(DType dtype);

struct ShapedType {
  DType dtype = DType::f32;
  std::vector<std::int64_t> dims;

  std::size_t rank() const { return dims.size(); }
  bool operator==(const ShapedType&) const = default;
};

struct Literal {
  enum class Kind { integer, floating, boolean };

  Kind kind = Kind::integer;
  std::variant<std::int64_t, double, bool> value;
  /// Spelling in the dump, without any `:type` suffix.
  std::string source_text;
  /// Annotation when the dump prints typed literals (`1.0:f32[]`).
  std::optional<ShapedType> type;

  static Literal integer(std::int64_t v, std::string text);
  static Literal floating(double v, std::string text);
  static Literal boolean(bool v);

  /// inf / nan spellings, possibly negated.
  bool is_special_float() const;
  bool is_negative() const;
};

bool operator==(const Literal& a, const Literal& b);

struct Atom {
  std::variant<std::string, Literal> value;

  static Atom var(std::string name) { return Atom{std::move(name)}; }
  static Atom lit(Literal literal) { return Atom{std::move(literal)}; }

  bool is_var() const { return std::holds_alternative<std::string>(value); }
  const std::string& var_name() const { return std::get<std::string>(value); }
  const Literal& literal() const { return std::get<Literal>(value); }

  bool operator==(const Atom&) const = default;
};

struct Binder {
  std::string name;
  std::optional<ShapedType> type;
  bool dropped = false;

  static Binder named(std::string name, std::optional<ShapedType> type = {});
  static Binder drop(std::optional<ShapedType> type = {});

  bool operator==(const Binder&) const = default;
};

struct Program;
struct ParamValue;

/// `(a, b)` or `[a, b]`; the bracket style is kept for faithful re-printing.
struct ParamTuple {
  std::vector<ParamValue> items;
  bool square = false;
};

/// Bare symbol such as `float32`, `None` or `GatherScatterMode.CLIP`.
struct ParamSymbol {
  std::string text;
};

/// Constructor-style value, e.g. `GatherDimensionNumbers(offset_dims=(1,), ...)`
/// or `np.int64(1)`. Positional arguments have an empty key.
struct ParamCall {
  std::string callee;
  std::vector<std::string> keys;
  std::vector<ParamValue> args;
};

/// Angle-bracketed repr such as `<lambda>` or `<axis 0x7f...>`; kept verbatim.
struct ParamOpaque {
  std::string text;
};

struct NestedProgram {
  std::shared_ptr<const Program> program;
};

struct ParamValue {
  std::variant<Literal, ParamSymbol, ParamTuple, ParamCall, ParamOpaque,
               NestedProgram>
      value;

  bool is_program() const {
    return std::holds_alternative<NestedProgram>(value);
  }
  const Program& program() const {
    return *std::get<NestedProgram>(value).program;
  }
};

bool operator==(const ParamValue& a, const ParamValue& b);
inline bool operator==(const ParamTuple& a, const ParamTuple& b) {
  return a.square == b.square && a.items == b.items;
}
inline bool operator==(const ParamSymbol& a, const ParamSymbol& b) {
  return a.text == b.text;
}
inline bool operator==(const ParamOpaque& a, const ParamOpaque& b) {
  return a.text == b.text;
}
inline bool operator==(const ParamCall& a, const ParamCall& b) {
  return a.callee == b.callee && a.keys == b.keys && a.args == b.args;
}
bool operator==(const NestedProgram& a, const NestedProgram& b);

using ParamMap = std::vector<std::pair<std::string, ParamValue>>;

struct Equation {
  std::vector<Binder> outputs;
  std::string primitive;
  ParamMap params;
  std::vector<Atom> inputs;

  const ParamValue* param(std::string_view key) const;
  bool operator==(const Equation&) const = default;
};

struct Program {
  std::vector<Binder> constvars;
  std::vector<Binder> invars;
  std::vector<Equation> equations;
  std::vector<Atom> outputs;

  bool operator==(const Program&) const = default;
};

/// Depth of nested tuple/call/program structure; scalars have depth 0.
std::size_t nesting_depth(const ParamValue& value);

struct Violation {
  /// Index of the offending equation, or nullopt for header/output problems.
  std::optional<std::size_t> equation;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool operator==(const ValidationResult&) const = default;
};

/// Checks def-before-use, per-scope binder uniqueness and that dropped
/// binders are never read. Nested programs are validated as closed scopes.
ValidationResult validate(const Program& program);

/// Prints a program back in dump syntax. Shared sub-programs are inlined.
std::string pretty_print(const Program& program);
std::string pretty_print(const ParamValue& value);

}  // namespace jaxpr2py
