#include "rules/rules.hpp"

namespace jaxpr2py::rules {

namespace {

const Program& program_param(const Equation& eq, const std::string& key) {
  const ParamValue& v = require_param(eq, key);
  if (!v.is_program()) {
    throw TranslationError(eq.primitive, "parameter '" + key + "' of '" +
                                             eq.primitive + "' is not a program");
  }
  return v.program();
}

std::vector<std::string> call_operands(const Equation& eq, TranslationContext& ctx,
                                       std::size_t first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = first; i < first + count; ++i) {
    out.push_back(array_operand(eq.inputs[i], eq, ctx));
  }
  return out;
}

void check_signature(const Equation& eq, const Program& p, std::size_t inputs,
                     std::size_t outputs) {
  if (p.invars.size() != inputs || p.outputs.size() != outputs) {
    throw TranslationError(eq.primitive, "program signature of '" + eq.primitive +
                                             "' does not match its operands");
  }
}

// Plain call of a lifted program: pjit, closed_call, remat, custom_jvp_call...
RenderFn call_rule(std::vector<std::string> keys) {
  return [keys](const Equation& eq, TranslationContext& ctx) {
    const Program* body = nullptr;
    for (const auto& k : keys) {
      if (const ParamValue* v = eq.param(k); v && v->is_program()) {
        body = &v->program();
        break;
      }
    }
    if (!body) {
      throw TranslationError(eq.primitive, "'" + eq.primitive + "' has no program parameter");
    }
    check_signature(eq, *body, eq.inputs.size(), eq.outputs.size());
    const std::string fn = lift_program(*body, ctx);
    const auto args = call_operands(eq, ctx, 0, eq.inputs.size());
    return Statements{assign(ctx.bind_outputs(eq), fn + "(" + join(args) + ")")};
  };
}

Statements render_cond(const Equation& eq, TranslationContext& ctx) {
  const auto* branches = std::get_if<ParamTuple>(&require_param(eq, "branches").value);
  if (!branches || branches->items.empty() || eq.inputs.empty()) {
    throw TranslationError(eq.primitive, "'cond' needs branches and an index operand");
  }
  std::vector<std::string> names;
  for (const auto& b : branches->items) {
    if (!b.is_program()) throw TranslationError(eq.primitive, "'cond' branch is not a program");
    check_signature(eq, b.program(), eq.inputs.size() - 1, eq.outputs.size());
    names.push_back(lift_program(b.program(), ctx));
  }
  const std::string index = ctx.operand(eq.inputs[0]);
  const auto args = call_operands(eq, ctx, 1, eq.inputs.size() - 1);
  return {assign(ctx.bind_outputs(eq),
                 py_tuple(names) + "[int(" + index + ")](" + join(args) + ")")};
}

Statements render_while(const Equation& eq, TranslationContext& ctx) {
  const Program& body = program_param(eq, "body_jaxpr");
  const Program& cond = program_param(eq, "cond_jaxpr");
  const auto body_n = static_cast<std::size_t>(param_int(eq, "body_nconsts"));
  const auto cond_n = static_cast<std::size_t>(param_int(eq, "cond_nconsts"));
  if (cond_n + body_n + eq.outputs.size() != eq.inputs.size() || eq.outputs.empty()) {
    throw TranslationError(eq.primitive, "'while' operand counts do not match its results");
  }
  const std::size_t carry_n = eq.outputs.size();
  check_signature(eq, body, body_n + carry_n, carry_n);
  check_signature(eq, cond, cond_n + carry_n, 1);
  const std::string body_fn = lift_program(body, ctx);
  const std::string cond_fn = lift_program(cond, ctx);

  auto cond_args = call_operands(eq, ctx, 0, cond_n);
  auto body_args = call_operands(eq, ctx, cond_n, body_n);
  const auto init = call_operands(eq, ctx, cond_n + body_n, carry_n);
  const auto carry = ctx.bind_outputs(eq);
  cond_args.insert(cond_args.end(), carry.begin(), carry.end());
  body_args.insert(body_args.end(), carry.begin(), carry.end());
  return {assign(carry, join(init)),
          "while " + cond_fn + "(" + join(cond_args) + "):",
          ctx.indent() + assign(carry, body_fn + "(" + join(body_args) + ")")};
}

Statements render_scan(const Equation& eq, TranslationContext& ctx) {
  const Program& body = program_param(eq, "jaxpr");
  const auto length = param_int(eq, "length");
  const auto consts_n = static_cast<std::size_t>(param_int(eq, "num_consts"));
  const auto carry_n = static_cast<std::size_t>(param_int(eq, "num_carry"));
  const bool reverse = param_bool(eq, "reverse", false);
  if (consts_n + carry_n > eq.inputs.size() || carry_n > eq.outputs.size() || length < 0) {
    throw TranslationError(eq.primitive, "'scan' operand counts do not match its results");
  }
  const std::size_t xs_n = eq.inputs.size() - consts_n - carry_n;
  const std::size_t ys_n = eq.outputs.size() - carry_n;
  check_signature(eq, body, consts_n + carry_n + xs_n, carry_n + ys_n);
  const std::string fn = lift_program(body, ctx);

  auto args = call_operands(eq, ctx, 0, consts_n);
  const auto init = call_operands(eq, ctx, consts_n, carry_n);
  const auto xs = call_operands(eq, ctx, consts_n + carry_n, xs_n);
  const auto outs = ctx.bind_outputs(eq);
  const std::vector<std::string> carry(outs.begin(), outs.begin() + carry_n);

  NameEnv& env = ctx.env();
  const std::string step = env.fresh_temp("step");
  std::vector<std::string> lists, items;
  for (std::size_t i = 0; i < ys_n; ++i) {
    lists.push_back(env.fresh_temp("ys"));
    items.push_back(env.fresh_temp("y"));
  }
  args.insert(args.end(), carry.begin(), carry.end());
  for (const auto& x : xs) args.push_back(x + "[" + step + "]");
  std::vector<std::string> targets = carry;
  targets.insert(targets.end(), items.begin(), items.end());

  Statements out;
  if (carry_n) out.push_back(assign(carry, join(init)));
  for (const auto& l : lists) out.push_back(l + " = []");
  const std::string range = "range(" + std::to_string(length) + ")";
  out.push_back("for " + step + " in " + (reverse ? "reversed(" + range + ")" : range) + ":");
  out.push_back(ctx.indent() + assign(targets, fn + "(" + join(args) + ")"));
  for (std::size_t i = 0; i < ys_n; ++i) {
    out.push_back(ctx.indent() + lists[i] + ".append(" + items[i] + ")");
  }
  for (std::size_t i = 0; i < ys_n; ++i) {
    const std::string src = reverse ? lists[i] + "[::-1]" : lists[i];
    out.push_back(outs[carry_n + i] + " = " + ctx.call("stack", src));
  }
  return out;
}

Statements render_pmap(const Equation& eq, TranslationContext& ctx) {
  const Program& body = program_param(eq, eq.param("call_jaxpr") ? "call_jaxpr" : "jaxpr");
  check_signature(eq, body, eq.inputs.size(), eq.outputs.size());
  std::vector<std::optional<std::int64_t>> in_axes, out_axes;
  auto axes = [&](const char* key, std::size_t n) {
    std::vector<std::optional<std::int64_t>> result(n, 0);
    const ParamValue* v = eq.param(key);
    if (!v) return result;
    const auto* t = std::get_if<ParamTuple>(&v->value);
    if (!t || t->items.size() != n) {
      throw TranslationError(eq.primitive, std::string(key) + " does not match the operands");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto* sym = std::get_if<ParamSymbol>(&t->items[i].value);
      if (sym && sym->text == "None") {
        result[i] = std::nullopt;
      } else if (auto k = as_int(t->items[i])) {
        result[i] = *k;
      } else {
        throw TranslationError(eq.primitive, std::string(key) + " entries must be integers");
      }
    }
    return result;
  };
  in_axes = axes("in_axes", eq.inputs.size());
  out_axes = axes("out_axes", eq.outputs.size());
  const std::string fn = lift_program(body, ctx);
  const auto args = call_operands(eq, ctx, 0, eq.inputs.size());
  auto spell = [](const std::optional<std::int64_t>& a) {
    return a ? std::to_string(*a) : std::string("None");
  };
  Statements out{"# parallel map over the leading axis, evaluated on one device"};
  const auto targets = ctx.bind_outputs(eq);

  if (ctx.framework()) {
    std::vector<std::string> ins, outs_spec;
    for (const auto& a : in_axes) ins.push_back(spell(a));
    for (const auto& a : out_axes) outs_spec.push_back(spell(a));
    const std::string out_spec = outs_spec.size() == 1 ? outs_spec[0] : py_tuple(outs_spec);
    ctx.require("from jax import vmap");
    out.push_back(assign(targets, "vmap(" + fn + ", in_axes=" + py_tuple(ins) +
                                      ", out_axes=" + out_spec + ")(" + join(args) + ")"));
    return out;
  }

  const auto size = param_int(eq, "axis_size");
  for (std::size_t i = 1; i < out_axes.size(); ++i) {
    if (out_axes[i] != out_axes[0]) numpy_unsupported(eq, "mixed pmap output axes have no equivalent");
  }
  if (!out_axes.empty() && !out_axes[0]) numpy_unsupported(eq, "unmapped pmap outputs have no equivalent");
  const std::string i = ctx.env().fresh_temp("i");
  std::vector<std::string> per_item;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!in_axes[k]) {
      per_item.push_back(args[k]);
    } else if (*in_axes[k] == 0) {
      per_item.push_back(args[k] + "[" + i + "]");
    } else {
      per_item.push_back(ctx.call("take", args[k] + ", " + i + ", axis=" + std::to_string(*in_axes[k])));
    }
  }
  const std::string axis = out_axes.empty() ? "0" : std::to_string(*out_axes[0]);
  const std::string results = "[" + fn + "(" + join(per_item) + ") for " + i + " in range(" +
                              std::to_string(size) + ")]";
  if (targets.size() == 1) {
    out.push_back(targets[0] + " = " + ctx.call("stack", results + ", axis=" + axis));
  } else {
    const std::string t = ctx.env().fresh_temp("t");
    out.push_back(assign(targets, "(" + ctx.call("stack", t + ", axis=" + axis) + " for " + t +
                                      " in zip(*" + results + "))"));
  }
  return out;
}

}  // namespace

void add_higher_order(OperatorRegistry& r) {
  const std::vector<std::string> keys{"jaxpr", "call_jaxpr", "fun_jaxpr"};
  for (const char* name : {"pjit", "closed_call", "core_call", "xla_call", "remat2",
                           "checkpoint", "custom_jvp_call", "custom_vjp_call",
                           "custom_vjp_call_jaxpr"}) {
    r.add({name, call_rule(keys)});
  }
  r.add({"cond", render_cond});
  r.add({"while", render_while});
  r.add({"scan", render_scan});
  r.add({"xla_pmap", render_pmap});
  r.add({"pmap", render_pmap});
}

}  // namespace jaxpr2py::rules
