#include "rules/rules.hpp"

namespace jaxpr2py {

namespace rules {

void check_arity(const Equation& eq, std::size_t inputs, std::size_t outputs) {
  if (eq.inputs.size() != inputs || eq.outputs.size() != outputs) {
    throw TranslationError(
        eq.primitive, "'" + eq.primitive + "' expects " +
                          std::to_string(inputs) + " operand(s) and " +
                          std::to_string(outputs) + " result(s), got " +
                          std::to_string(eq.inputs.size()) + " and " +
                          std::to_string(eq.outputs.size()));
  }
}

void numpy_unsupported(const Equation& eq, const std::string& why) {
  throw UnknownOperator(eq.primitive, why + " in the plain-numpy dialect");
}

std::string array_operand(const Atom& atom, const Equation& eq,
                          TranslationContext& ctx) {
  std::string text = ctx.operand(atom);
  if (atom.is_var()) return text;
  const Literal& lit = atom.literal();
  if (!lit.type) return ctx.call("asarray", text);
  return ctx.call("asarray",
                  text + ", dtype=" +
                      dtype_name(eq, lit.type->dtype, ctx.framework()));
}

std::optional<ShapedType> output_type(const Equation& eq) {
  if (eq.outputs.empty()) return std::nullopt;
  return eq.outputs.front().type;
}

bool is_integer(DType dtype) {
  switch (dtype) {
    case DType::i8:
    case DType::i16:
    case DType::i32:
    case DType::i64:
    case DType::u8:
    case DType::u16:
    case DType::u32:
    case DType::u64:
      return true;
    default:
      return false;
  }
}

}  // namespace rules

const OperatorRegistry& builtin_registry() {
  static const OperatorRegistry registry = [] {
    OperatorRegistry r;
    rules::add_elementwise(r);
    rules::add_tensor(r);
    rules::add_higher_order(r);
    return r;
  }();
  return registry;
}

}  // namespace jaxpr2py
