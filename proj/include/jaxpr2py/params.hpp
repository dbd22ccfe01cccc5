#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jaxpr2py/ir.hpp"

namespace jaxpr2py {

// Typed access to equation parameters. Every accessor throws
// TranslationError naming the primitive when the parameter is missing or has
// an unexpected shape.

const ParamValue& require_param(const Equation& eq, const std::string& key);

std::int64_t param_int(const Equation& eq, const std::string& key);
std::optional<std::int64_t> param_int_opt(const Equation& eq,
                                          const std::string& key);
bool param_bool(const Equation& eq, const std::string& key, bool fallback);

/// Flat tuple or list of integers. `np.int64(3)` items are accepted.
std::vector<std::int64_t> param_ints(const Equation& eq, const std::string& key);
std::optional<std::vector<std::int64_t>> param_ints_opt(const Equation& eq,
                                                        const std::string& key);

/// Symbol text (`int32`, `RoundingMethod.AWAY_FROM_ZERO`) or "" when absent.
std::string param_symbol(const Equation& eq, const std::string& key);
bool param_is_none(const Equation& eq, const std::string& key);

std::optional<std::int64_t> as_int(const ParamValue& value);
std::optional<std::vector<std::int64_t>> as_ints(const ParamValue& value);

/// Keyword argument of a constructor-style value.
const ParamValue* call_arg(const ParamCall& call, const std::string& key);

/// Target-language dtype name for a dtype parameter (`float32` → `float32`,
/// `bool` → `bool_`). Throws for dtypes the selected dialect cannot express.
std::string dtype_name(const Equation& eq, const std::string& symbol,
                       bool framework);
std::string dtype_name(const Equation& eq, DType dtype, bool framework);

/// Python spelling of an integer sequence as a tuple: `()`, `(1,)`, `(1, 2)`.
std::string int_tuple(const std::vector<std::int64_t>& values);

/// Python expression for a parameter passed through to a `lax` call.
/// Symbols in the `lax` namespace get the `lax.` qualifier; programs cannot
/// be rendered and throw.
std::string render_lax_value(const Equation& eq, const ParamValue& value);

}  // namespace jaxpr2py
