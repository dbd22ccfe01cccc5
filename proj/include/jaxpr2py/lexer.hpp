#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jaxpr2py/errors.hpp"

namespace jaxpr2py {

enum class TokenKind {
  lbrace,
  rbrace,
  lbrack,
  rbrack,
  lparen,
  rparen,
  colon,
  semi,
  dot,
  comma,
  equals,
  ident,
  integer,
  floating,
  boolean,
  keyword,     // lambda, let, in
  underscore,  // bare `_`
  opaque,      // `<...>` repr inside parameters
  eof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::eof;
  std::string text;
  SourcePos pos;

  bool is(TokenKind k) const { return kind == k; }
  bool is_keyword(std::string_view word) const {
    return kind == TokenKind::keyword && text == word;
  }
};

/// Splits a Jaxpr dump into tokens. All whitespace (newlines included) only
/// separates tokens. The result always ends with an eof token.
///
/// Throws LexError on the first character outside the token alphabet; `#`
/// comments are not part of the dump format and are rejected.
std::vector<Token> tokenize(std::string_view source);

}  // namespace jaxpr2py
