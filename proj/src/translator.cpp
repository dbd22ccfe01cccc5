#include "jaxpr2py/translator.hpp"

#include <algorithm>

#include "jaxpr2py/errors.hpp"

namespace jaxpr2py {

void OperatorRegistry::add(OperatorRule rule) {
  rules_.insert_or_assign(std::move(rule.primitive), std::move(rule.render));
}

const RenderFn* OperatorRegistry::find(std::string_view primitive) const {
  auto it = rules_.find(primitive);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> OperatorRegistry::primitives() const {
  std::vector<std::string> out;
  out.reserve(rules_.size());
  for (const auto& [name, render] : rules_) out.push_back(name);
  return out;
}

OperatorRegistry register_rule(OperatorRule rule, OperatorRegistry registry) {
  if (rule.primitive.empty()) {
    throw DecompileError("operator rule needs a primitive name");
  }
  registry.add(std::move(rule));
  return registry;
}

TranslationContext::TranslationContext(const OperatorRegistry& registry,
                                       EmitConfig config)
    : registry_(&registry), config_(std::move(config)) {}

void TranslationContext::note_unsupported(const std::string& primitive) {
  auto& seen = report_.unsupported;
  if (std::find(seen.begin(), seen.end(), primitive) == seen.end()) {
    seen.push_back(primitive);
  }
}

void TranslationContext::enter_scope(const Program& program) {
  env_ = NameEnv();
  types_.clear();
  auto note = [&](const Binder& b) {
    if (b.dropped) return;
    env_.avoid(b.name);
    if (b.type) types_[b.name] = *b.type;
  };
  for (const auto& b : program.constvars) note(b);
  for (const auto& b : program.invars) note(b);
  for (const auto& eq : program.equations) {
    for (const auto& b : eq.outputs) note(b);
  }
}

TranslationContext::Scope TranslationContext::swap_scope(Scope next) {
  Scope previous{std::move(env_), std::move(types_)};
  env_ = std::move(next.env);
  types_ = std::move(next.types);
  return previous;
}

void TranslationContext::require_star() {
  imports_.require(framework() ? "from jax.numpy import *"
                               : "from numpy import *");
}

std::string TranslationContext::call(std::string_view fn,
                                     const std::string& args) {
  require_star();
  return std::string(fn) + "(" + args + ")";
}

std::string TranslationContext::lax(std::string_view fn,
                                    const std::string& args) {
  imports_.require("from jax import lax");
  return "lax." + std::string(fn) + "(" + args + ")";
}

std::string TranslationContext::operand(const Atom& atom) {
  if (atom.is_var()) {
    if (auto name = env_.lookup(atom.var_name())) return *name;
    // Only reachable for programs that skipped validation.
    throw DecompileError("undefined variable " + atom.var_name());
  }
  const Literal& lit = atom.literal();
  if (lit.is_special_float()) require_star();
  return lit.source_text;
}

std::string TranslationContext::operand_tight(const Atom& atom) {
  std::string text = operand(atom);
  if (!atom.is_var() && atom.literal().is_negative()) return "(" + text + ")";
  return text;
}

std::vector<std::string> TranslationContext::operands(const Equation& eq) {
  std::vector<std::string> out;
  out.reserve(eq.inputs.size());
  for (const auto& a : eq.inputs) out.push_back(operand(a));
  return out;
}

std::string TranslationContext::bind(const Binder& binder) {
  return binder.dropped ? env_.fresh_dropped() : env_.sanitize(binder.name);
}

std::vector<std::string> TranslationContext::bind_outputs(const Equation& eq) {
  std::vector<std::string> out;
  out.reserve(eq.outputs.size());
  for (const auto& b : eq.outputs) out.push_back(bind(b));
  return out;
}

std::optional<ShapedType> TranslationContext::type_of(const Atom& atom) const {
  if (!atom.is_var()) return atom.literal().type;
  auto it = types_.find(atom.var_name());
  if (it == types_.end()) return std::nullopt;
  return it->second;
}

std::string TranslationContext::next_helper_name() {
  return "fn_" + std::to_string(helper_counter_++);
}

namespace {

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

Statements placeholder(const Equation& eq, TranslationContext& ctx,
                       const std::string& reason) {
  ctx.note_unsupported(eq.primitive);
  for (const auto& b : eq.outputs) {
    if (!b.dropped) ctx.env().sanitize(b.name);
  }
  return {"# UNSUPPORTED: " + one_line(reason),
          "raise NotImplementedError(\"" + eq.primitive + "\")"};
}

}  // namespace

Statements translate_equation(const Equation& eq, TranslationContext& ctx) {
  const RenderFn* render = ctx.registry().find(eq.primitive);
  if (!render) {
    if (ctx.config().strict) throw UnknownOperator(eq.primitive);
    return placeholder(eq, ctx, UnknownOperator(eq.primitive).what());
  }
  if (ctx.config().strict) return (*render)(eq, ctx);
  try {
    return (*render)(eq, ctx);
  } catch (const TranslationError& e) {
    return placeholder(eq, ctx, e.what());
  }
}

std::string lift_program(const Program& nested, TranslationContext& ctx) {
  if (auto it = ctx.lifted().find(&nested); it != ctx.lifted().end()) {
    return it->second;
  }
  const std::string name = ctx.next_helper_name();
  ctx.lifted().emplace(&nested, name);
  std::vector<std::string> lines = translate_function(name, nested, ctx, false);
  ctx.add_helper(HelperDef{name, std::move(lines)});
  return name;
}

std::vector<std::string> translate_function(const std::string& name,
                                            const Program& program,
                                            TranslationContext& ctx,
                                            bool allow_consts) {
  if (!allow_consts && !program.constvars.empty()) {
    throw TranslationError("lambda",
                           "nested program with constant binders is not supported");
  }
  TranslationContext::Scope saved = ctx.swap_scope({});
  ctx.enter_scope(program);

  std::vector<std::string> params;
  for (const auto& b : program.invars) params.push_back(ctx.bind(b));
  for (const auto& b : program.constvars) params.push_back(ctx.bind(b));

  std::vector<std::string> lines;
  lines.push_back("def " + name + "(" + join(params) + "):");
  const std::string& pad = ctx.indent();
  try {
    for (const auto& eq : program.equations) {
      for (auto& stmt : translate_equation(eq, ctx)) {
        lines.push_back(pad + stmt);
      }
    }
    if (!program.outputs.empty()) {
      std::vector<std::string> outs;
      for (const auto& a : program.outputs) outs.push_back(ctx.operand(a));
      lines.push_back(pad + "return " + join(outs));
    } else if (lines.size() == 1) {
      lines.push_back(pad + "pass");
    }
  } catch (...) {
    ctx.swap_scope(std::move(saved));
    throw;
  }
  ctx.swap_scope(std::move(saved));
  return lines;
}

std::string assign(const std::vector<std::string>& targets,
                   const std::string& expr) {
  if (targets.empty()) return expr;
  return join(targets) + " = " + expr;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string py_tuple(const std::vector<std::string>& items) {
  if (items.size() == 1) return "(" + items[0] + ",)";
  return "(" + join(items) + ")";
}

}  // namespace jaxpr2py
