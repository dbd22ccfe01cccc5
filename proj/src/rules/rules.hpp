#pragma once

#include <string>
#include <vector>

#include "jaxpr2py/errors.hpp"
#include "jaxpr2py/params.hpp"
#include "jaxpr2py/translator.hpp"

namespace jaxpr2py::rules {

void add_elementwise(OperatorRegistry& registry);
void add_tensor(OperatorRegistry& registry);
void add_higher_order(OperatorRegistry& registry);

void check_arity(const Equation& eq, std::size_t inputs, std::size_t outputs);

/// Throws the dialect error for a construct with no plain numpy rendering.
[[noreturn]] void numpy_unsupported(const Equation& eq, const std::string& why);

/// Operand that must be an array: typed literals become
/// `asarray(lit, dtype=dt)` so their dtype survives outside the framework.
std::string array_operand(const Atom& atom, const Equation& eq,
                          TranslationContext& ctx);

/// Output type of the first output binder, when annotated.
std::optional<ShapedType> output_type(const Equation& eq);

bool is_integer(DType dtype);

}  // namespace jaxpr2py::rules
