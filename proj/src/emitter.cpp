#include "jaxpr2py/emitter.hpp"

#include <cctype>

#include "jaxpr2py/errors.hpp"
#include "jaxpr2py/parser.hpp"
#include "jaxpr2py/renamer.hpp"

namespace jaxpr2py {

std::optional<Dialect> dialect_from_string(std::string_view text) {
  if (text == "framework-numpy") return Dialect::framework_numpy;
  if (text == "plain-numpy") return Dialect::plain_numpy;
  return std::nullopt;
}

std::string_view to_string(Dialect dialect) {
  return dialect == Dialect::framework_numpy ? "framework-numpy" : "plain-numpy";
}

bool is_valid_function_name(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return !is_reserved_name(name);
}

void check_config(const EmitConfig& config) {
  if (!is_valid_function_name(config.function_name)) {
    throw DecompileError("invalid function name '" + config.function_name +
                         "': not an identifier or a reserved name");
  }
  if (config.indent.empty() ||
      config.indent.find_first_not_of(" \t") != std::string::npos) {
    throw DecompileError("indent must be a non-empty run of spaces or tabs");
  }
}

Decompilation emit_program(const Program& program, const EmitConfig& config,
                           const OperatorRegistry& registry) {
  check_config(config);
  TranslationContext ctx(registry, config);
  const std::vector<std::string> main =
      translate_function(config.function_name, program, ctx, true);

  std::string out;
  auto put = [&out](const std::vector<std::string>& lines) {
    for (const auto& l : lines) out += l + "\n";
  };
  const auto imports = ctx.imports().emit();
  put(imports);
  if (!imports.empty()) out += "\n";
  for (const auto& helper : ctx.helpers()) {
    put(helper.lines);
    out += "\n";
  }
  put(main);
  return {std::move(out), ctx.report()};
}

std::string emit_module(const Program& program, const EmitConfig& config,
                        const OperatorRegistry& registry) {
  return emit_program(program, config, registry).source;
}

Decompilation decompile(std::string_view source, const EmitConfig& config,
                        const OperatorRegistry& registry) {
  check_config(config);
  return emit_program(parse(source), config, registry);
}

}  // namespace jaxpr2py
