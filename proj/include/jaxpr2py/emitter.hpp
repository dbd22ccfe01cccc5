#pragma once

#include <string>
#include <string_view>

#include "jaxpr2py/config.hpp"
#include "jaxpr2py/ir.hpp"
#include "jaxpr2py/translator.hpp"

namespace jaxpr2py {

struct Decompilation {
  std::string source;
  DecompileReport report;
};

/// Identifier syntax check plus the renamer's reserved-word check.
bool is_valid_function_name(std::string_view name);

/// Throws DecompileError when the function name or indent is unusable.
void check_config(const EmitConfig& config);

/// Imports, lifted helpers in lift order, then `def <name>(...)`.
Decompilation emit_program(const Program& program, const EmitConfig& config,
                           const OperatorRegistry& registry = builtin_registry());

std::string emit_module(const Program& program, const EmitConfig& config,
                        const OperatorRegistry& registry = builtin_registry());

/// Tokenize, parse, validate, translate and emit.
Decompilation decompile(std::string_view source, const EmitConfig& config,
                        const OperatorRegistry& registry = builtin_registry());

}  // namespace jaxpr2py
