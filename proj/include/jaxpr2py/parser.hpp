#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "jaxpr2py/ir.hpp"
#include "jaxpr2py/lexer.hpp"

namespace jaxpr2py {

template <typename T>
struct Parsed {
  T value;
  std::size_t next = 0;  // index of the first unconsumed token
};

/// Parses `{ lambda consts ; inputs . let equations in ( outputs ) }` starting
/// at `cursor`, which must point at the opening brace. The returned program
/// has been validated; violations are raised as ParseError.
Parsed<Program> parse_program(std::span<const Token> tokens,
                              std::size_t cursor);

/// Parses one equation: output binders, `=`, primitive, optional `[params]`
/// and input atoms.
Parsed<Equation> parse_equation(std::span<const Token> tokens,
                                std::size_t cursor);

/// Parses `[key=value ...]`; `cursor` must point at the opening bracket.
Parsed<ParamMap> parse_params(std::span<const Token> tokens,
                              std::size_t cursor);

/// Tokenizes and parses a complete dump, including the optional preamble of
/// shared sub-programs (`let name = { lambda ... } in`) that newer printers
/// emit. References to shared programs are resolved to the same
/// NestedProgram instance.
Program parse(std::string_view source);

}  // namespace jaxpr2py
