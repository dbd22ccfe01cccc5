#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace jaxpr2py {

enum class Dialect {
  framework_numpy,  // jax.numpy star import, jax.lax where needed
  plain_numpy,      // numpy star import, scipy.special for special functions
};

std::optional<Dialect> dialect_from_string(std::string_view text);
std::string_view to_string(Dialect dialect);

struct EmitConfig {
  std::string function_name = "f";
  Dialect dialect = Dialect::framework_numpy;
  std::string indent = "    ";
  bool strict = true;
};

}  // namespace jaxpr2py
