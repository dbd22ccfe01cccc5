#include <algorithm>

#include "rules/rules.hpp"

namespace jaxpr2py::rules {

namespace {

// Operations on literals alone would produce a Python scalar; keep the
// annotated dtype instead.
Statements one(const Equation& eq, TranslationContext& ctx, std::string expr) {
  const auto type = output_type(eq);
  const bool literals_only =
      !eq.inputs.empty() && std::none_of(eq.inputs.begin(), eq.inputs.end(),
                                         [](const Atom& a) { return a.is_var(); });
  if (literals_only && type && eq.outputs.size() == 1) {
    expr = ctx.call("asarray", expr + ", dtype=" + dtype_name(eq, type->dtype, ctx.framework()));
  }
  return {assign(ctx.bind_outputs(eq), expr)};
}

RenderFn infix(std::string op) {
  return [op](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 2, 1);
    const std::string lhs = op == "**" ? ctx.operand_tight(eq.inputs[0])
                                       : ctx.operand(eq.inputs[0]);
    return one(eq, ctx, lhs + " " + op + " " + ctx.operand(eq.inputs[1]));
  };
}

RenderFn function(std::string name, std::size_t arity = 1) {
  return [name, arity](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, arity, 1);
    return one(eq, ctx, ctx.call(name, join(ctx.operands(eq))));
  };
}

// Functions the framework exposes through jax.scipy.special.
RenderFn special(std::string name) {
  return [name](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 1, 1);
    ctx.require(ctx.framework() ? "from jax.scipy.special import " + name
                                : "from scipy.special import " + name);
    return one(eq, ctx, name + "(" + ctx.operand(eq.inputs[0]) + ")");
  };
}

RenderFn lax_only(std::string name, std::size_t arity) {
  return [name, arity](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, arity, 1);
    if (!ctx.framework()) numpy_unsupported(eq, "'" + eq.primitive + "' has no equivalent");
    return one(eq, ctx, ctx.lax(name, join(ctx.operands(eq))));
  };
}

Statements render_neg(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, "-" + ctx.operand_tight(eq.inputs[0]));
}

Statements render_div(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 2, 1);
  const auto type = output_type(eq);
  const std::string a = ctx.operand(eq.inputs[0]);
  const std::string b = ctx.operand(eq.inputs[1]);
  if (type && is_integer(type->dtype)) {
    // Integer division truncates toward zero.
    if (ctx.framework()) return one(eq, ctx, ctx.lax("div", a + ", " + b));
    return one(eq, ctx, "(" + a + " - " + ctx.call("fmod", a + ", " + b) +
                            ") // " + b);
  }
  return one(eq, ctx, a + " / " + b);
}

Statements render_integer_pow(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::int64_t y = param_int(eq, "y");
  return one(eq, ctx,
             ctx.operand_tight(eq.inputs[0]) + " ** " + std::to_string(y));
}

Statements render_logistic(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::string x = ctx.operand(eq.inputs[0]);
  if (ctx.framework()) return one(eq, ctx, ctx.lax("logistic", x));
  return one(eq, ctx, "1 / (1 + " + ctx.call("exp", "-" + ctx.operand_tight(eq.inputs[0])) + ")");
}

Statements render_rsqrt(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::string x = ctx.operand(eq.inputs[0]);
  if (ctx.framework()) return one(eq, ctx, ctx.lax("rsqrt", x));
  return one(eq, ctx, "1 / " + ctx.call("sqrt", x));
}

Statements render_round(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  bool away = true;  // lax default
  if (const ParamValue* method = eq.param("rounding_method")) {
    if (auto n = as_int(*method)) {
      away = *n == 0;
    } else {
      const std::string text = param_symbol(eq, "rounding_method");
      if (text.find("TO_NEAREST_EVEN") != std::string::npos) {
        away = false;
      } else if (text.find("AWAY_FROM_ZERO") == std::string::npos) {
        throw TranslationError(eq.primitive, "unknown rounding method " + text);
      }
    }
  }
  const std::string x = ctx.operand(eq.inputs[0]);
  if (!away) return one(eq, ctx, ctx.call("round", x));
  if (ctx.framework()) {
    return one(eq, ctx,
               ctx.lax("round", x + ", lax.RoundingMethod.AWAY_FROM_ZERO"));
  }
  return one(eq, ctx, ctx.call("sign", x) + " * " +
                          ctx.call("floor", ctx.call("abs", x) + " + 0.5"));
}

Statements render_identity(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.size() != eq.outputs.size() || eq.inputs.empty()) {
    check_arity(eq, 1, 1);
  }
  return one(eq, ctx, join(ctx.operands(eq)));
}

Statements render_stop_gradient(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::string x = ctx.operand(eq.inputs[0]);
  if (ctx.framework()) return one(eq, ctx, ctx.lax("stop_gradient", x));
  return one(eq, ctx, x);
}

Statements render_convert(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::string dt =
      dtype_name(eq, param_symbol(eq, "new_dtype"), ctx.framework());
  return one(eq, ctx,
             ctx.call("asarray", ctx.operand(eq.inputs[0])) + ".astype(" + dt + ")");
}

std::size_t dtype_bits(DType dtype) {
  switch (dtype) {
    case DType::f16: case DType::bf16: case DType::i16: case DType::u16: return 16;
    case DType::f32: case DType::i32: case DType::u32: return 32;
    case DType::f64: case DType::i64: case DType::u64: return 64;
    default: return 8;
  }
}

Statements render_bitcast(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const std::string symbol = param_symbol(eq, "new_dtype");
  const std::string dt = dtype_name(eq, symbol, ctx.framework());
  const std::string x = ctx.operand(eq.inputs[0]);
  if (ctx.framework()) {
    ctx.require_star();
    return one(eq, ctx, ctx.lax("bitcast_convert_type", x + ", " + dt));
  }
  const auto in = ctx.type_of(eq.inputs[0]);
  const auto out = output_type(eq);
  if (!in || !out || dtype_bits(in->dtype) != dtype_bits(out->dtype)) {
    numpy_unsupported(eq, "bitcast between different widths");
  }
  ctx.require_star();
  return one(eq, ctx, ctx.call("asarray", x) + ".view(" + dt + ")");
}

Statements render_select_n(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.size() < 2 || eq.outputs.size() != 1) check_arity(eq, 2, 1);
  const auto ops = ctx.operands(eq);
  if (ops.size() == 2) return one(eq, ctx, ops[1]);
  if (ops.size() == 3) {
    return one(eq, ctx, ctx.call("where", ops[0] + ", " + ops[2] + ", " + ops[1]));
  }
  std::vector<std::string> cases(ops.begin() + 1, ops.end());
  return one(eq, ctx, ctx.call("choose", ops[0] + ", " + py_tuple(cases) +
                                             ", mode=\"clip\""));
}

Statements render_clamp(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 3, 1);
  const auto ops = ctx.operands(eq);
  return one(eq, ctx, ctx.call("clip", ops[1] + ", " + ops[0] + ", " + ops[2]));
}

Statements render_reduce_precision(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  if (!ctx.framework()) numpy_unsupported(eq, "reduced-precision rounding has no equivalent");
  const std::int64_t e = param_int(eq, "exponent_bits");
  const std::int64_t m = param_int(eq, "mantissa_bits");
  return one(eq, ctx, ctx.lax("reduce_precision",
                              ctx.operand(eq.inputs[0]) + ", exponent_bits=" +
                                  std::to_string(e) + ", mantissa_bits=" +
                                  std::to_string(m)));
}

Statements render_copy(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, ctx.call("copy", ctx.operand(eq.inputs[0])));
}

}  // namespace

void add_elementwise(OperatorRegistry& r) {
  const std::pair<const char*, const char*> infix_ops[] = {
      {"add", "+"},  {"add_any", "+"}, {"sub", "-"},  {"mul", "*"},
      {"pow", "**"}, {"and", "&"},     {"or", "|"},   {"xor", "^"},
      {"eq", "=="},  {"ne", "!="},     {"lt", "<"},   {"le", "<="},
      {"gt", ">"},   {"ge", ">="},     {"shift_left", "<<"},
      {"shift_right_arithmetic", ">>"},
  };
  for (const auto& [prim, op] : infix_ops) r.add({prim, infix(op)});

  const std::pair<const char*, const char*> unary[] = {
      {"exp", "exp"},         {"exp2", "exp2"},       {"log", "log"},
      {"log1p", "log1p"},     {"expm1", "expm1"},     {"sin", "sin"},
      {"cos", "cos"},         {"tan", "tan"},         {"asin", "arcsin"},
      {"acos", "arccos"},     {"atan", "arctan"},     {"sinh", "sinh"},
      {"cosh", "cosh"},       {"tanh", "tanh"},       {"asinh", "arcsinh"},
      {"acosh", "arccosh"},   {"atanh", "arctanh"},   {"sqrt", "sqrt"},
      {"cbrt", "cbrt"},       {"square", "square"},   {"abs", "abs"},
      {"sign", "sign"},       {"floor", "floor"},     {"ceil", "ceil"},
      {"is_finite", "isfinite"}, {"not", "invert"},
  };
  for (const auto& [prim, fn] : unary) r.add({prim, function(fn)});

  const std::pair<const char*, const char*> binary[] = {
      {"max", "maximum"}, {"min", "minimum"},       {"atan2", "arctan2"},
      {"rem", "fmod"},    {"nextafter", "nextafter"},
  };
  for (const auto& [prim, fn] : binary) r.add({prim, function(fn, 2)});

  const std::pair<const char*, const char*> specials[] = {
      {"erf", "erf"}, {"erfc", "erfc"}, {"erf_inv", "erfinv"},
      {"lgamma", "gammaln"}, {"digamma", "digamma"},
  };
  for (const auto& [prim, fn] : specials) r.add({prim, special(fn)});

  r.add({"population_count", lax_only("population_count", 1)});
  r.add({"shift_right_logical", lax_only("shift_right_logical", 2)});
  r.add({"neg", render_neg});
  r.add({"div", render_div});
  r.add({"integer_pow", render_integer_pow});
  r.add({"logistic", render_logistic});
  r.add({"rsqrt", render_rsqrt});
  r.add({"round", render_round});
  r.add({"stop_gradient", render_stop_gradient});
  r.add({"device_put", render_identity});
  r.add({"optimization_barrier", render_identity});
  r.add({"copy", render_copy});
  r.add({"copy_p", render_copy});
  r.add({"convert_element_type", render_convert});
  r.add({"bitcast_convert_type", render_bitcast});
  r.add({"select_n", render_select_n});
  r.add({"clamp", render_clamp});
  r.add({"reduce_precision", render_reduce_precision});
}

}  // namespace jaxpr2py::rules
