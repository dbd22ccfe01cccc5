#include "jaxpr2py/parser.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <unordered_set>

namespace jaxpr2py {

namespace {

using TK = TokenKind;

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t cursor)
      : toks_(tokens), pos_(cursor) {
    if (toks_.empty() || toks_.back().kind != TK::eof) {
      throw ParseError("token stream must end with end of input", SourcePos{});
    }
    if (pos_ >= toks_.size()) pos_ = toks_.size() - 1;
  }

  std::size_t position() const { return pos_; }

  Program toplevel() {
    while (peek().is_keyword("let")) {
      advance();
      const Token& name = expect(TK::ident, "shared program name");
      expect(TK::equals, "'='");
      auto shared = std::make_shared<const Program>(program());
      shared_[name.text] = std::move(shared);
      expect_keyword("in");
    }
    Program result = program();
    if (!peek().is(TK::eof)) fail({std::string(to_string(TK::eof))});
    return result;
  }

  Program program() {
    const SourcePos start = peek().pos;
    expect(TK::lbrace, "'{'");
    expect_keyword("lambda");

    Program prog;
    scopes_.emplace_back();
    while (!peek().is(TK::semi)) {
      prog.constvars.push_back(header_binder({"';'", "binder"}));
    }
    advance();
    while (!peek().is(TK::dot)) {
      prog.invars.push_back(header_binder({"'.'", "binder"}));
    }
    advance();
    expect_keyword("let");

    std::vector<SourcePos> eq_starts;
    while (!at_terminator()) {
      if (peek().is(TK::eof) || peek().is(TK::rbrace)) {
        fail({"equation", "'in'"});
      }
      eq_starts.push_back(peek().pos);
      prog.equations.push_back(equation());
      // Short bodies are printed on one line with `;` between equations.
      if (peek().is(TK::semi)) advance();
    }
    expect_keyword("in");
    expect(TK::lparen, "'('");
    while (!peek().is(TK::rparen)) {
      prog.outputs.push_back(atom());
      if (peek().is(TK::comma)) {
        advance();
      } else if (!peek().is(TK::rparen)) {
        fail({"','", "')'"});
      }
    }
    advance();
    expect(TK::rbrace, "'}'");
    scopes_.pop_back();

    const ValidationResult checked = validate(prog);
    if (!checked.ok()) {
      const Violation& first = checked.violations.front();
      const SourcePos where =
          first.equation && *first.equation < eq_starts.size()
              ? eq_starts[*first.equation]
              : start;
      throw ParseError("invalid program: " + first.message, where);
    }
    return prog;
  }

  Equation equation() {
    Equation eq;
    if (binders_then_equals(pos_)) {
      while (!peek().is(TK::equals)) eq.outputs.push_back(binder());
      advance();
    } else if (!(peek().is(TK::ident) && peek(1).is(TK::lbrack))) {
      fail({"binder", "'='"});
    }
    eq.primitive = expect(TK::ident, "primitive name").text;
    if (peek().is(TK::lbrack)) eq.params = params();
    while (starts_atom()) eq.inputs.push_back(atom());
    for (const auto& b : eq.outputs) {
      if (!b.dropped && !scopes_.empty()) scopes_.back().insert(b.name);
    }
    return eq;
  }

  ParamMap params() {
    expect(TK::lbrack, "'['");
    ParamMap map;
    while (!peek().is(TK::rbrack)) {
      const Token& key = peek();
      if (!key.is(TK::ident) && !key.is(TK::underscore)) {
        fail({"parameter name", "']'"});
      }
      advance();
      expect(TK::equals, "'='");
      map.emplace_back(key.text, value(key.text));
      if (peek().is(TK::comma)) advance();
    }
    advance();
    return map;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string message = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    message += ", found ";
    message += t.is(TK::eof) ? std::string("end of input")
                             : "'" + t.text + "'";
    throw ParseError(message, t.pos, std::move(expected));
  }

  const Token& expect(TK kind, const std::string& what) {
    if (!peek().is(kind)) fail({what});
    return advance();
  }

  void expect_keyword(std::string_view word) {
    if (!peek().is_keyword(word)) fail({"'" + std::string(word) + "'"});
    advance();
  }

  bool at_terminator() const {
    return peek().is_keyword("in") && peek(1).is(TK::lparen);
  }

  static bool is_word(const Token& t) {
    return t.is(TK::ident) || t.is(TK::keyword) ||
           (t.is(TK::floating) && (t.text == "inf" || t.text == "nan"));
  }

  static bool is_name_token(const Token& t) {
    return is_word(t) || t.is(TK::underscore);
  }

  // Scans `name[:type] ... =` without consuming anything.
  bool binders_then_equals(std::size_t at) const {
    std::size_t i = at;
    bool any = false;
    while (i < toks_.size() && is_name_token(toks_[i])) {
      any = true;
      ++i;
      if (i < toks_.size() && toks_[i].is(TK::colon)) {
        ++i;  // dtype
        if (i >= toks_.size() || !toks_[i].is(TK::ident)) return false;
        ++i;
        if (i >= toks_.size() || !toks_[i].is(TK::lbrack)) return false;
        while (i < toks_.size() && !toks_[i].is(TK::rbrack)) {
          if (!toks_[i].is(TK::lbrack) && !toks_[i].is(TK::integer) &&
              !toks_[i].is(TK::comma)) {
            return false;
          }
          ++i;
        }
        ++i;
      }
    }
    return any && i < toks_.size() && toks_[i].is(TK::equals);
  }

  bool starts_new_equation() const {
    const Token& t = peek();
    const bool new_line = pos_ > 0 && toks_[pos_ - 1].pos.line < t.pos.line;
    if (t.is(TK::ident) && peek(1).is(TK::lbrack)) return true;
    if (!binders_then_equals(pos_)) return false;
    if (new_line) return true;
    return (t.is(TK::ident) || t.is(TK::underscore) || t.is(TK::keyword)) &&
           peek(1).is(TK::colon);
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (at_terminator()) return false;
    if (!(is_word(t) || t.is(TK::integer) || t.is(TK::floating) ||
          t.is(TK::boolean))) {
      return false;
    }
    return !starts_new_equation();
  }

  bool bound(const std::string& name) const {
    // Nested programs are closed, so only the innermost scope is visible.
    return !scopes_.empty() && scopes_.back().count(name) > 0;
  }

  Atom atom() {
    const Token& t = peek();
    const bool special_word =
        t.is(TK::floating) && (t.text == "inf" || t.text == "nan");
    if (t.is(TK::ident) || t.is(TK::keyword) ||
        (special_word && !peek(1).is(TK::colon) && bound(t.text))) {
      advance();
      return Atom::var(t.text);
    }
    if (t.is(TK::integer) || t.is(TK::floating) || t.is(TK::boolean)) {
      return Atom::lit(literal());
    }
    fail({"variable", "literal"});
  }

  Literal literal() {
    const Token& t = advance();
    Literal lit;
    if (t.is(TK::boolean)) {
      lit = Literal::boolean(t.text == "True");
    } else if (t.is(TK::integer)) {
      std::int64_t v = 0;
      const char* first = t.text.data();
      const char* last = first + t.text.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("integer literal out of range: " + t.text, t.pos);
      }
      lit = Literal::integer(v, t.text);
    } else {
      lit = Literal::floating(std::strtod(t.text.c_str(), nullptr), t.text);
    }
    if (peek().is(TK::colon)) {
      advance();
      lit.type = shaped_type();
    }
    return lit;
  }

  ShapedType shaped_type() {
    const Token& name = peek();
    if (!name.is(TK::ident)) fail({"dtype"});
    auto dtype = dtype_from_string(name.text);
    if (!dtype) throw ParseError("unknown dtype '" + name.text + "'", name.pos);
    advance();
    ShapedType type{*dtype, {}};
    expect(TK::lbrack, "'['");
    while (!peek().is(TK::rbrack)) {
      const Token& dim = peek();
      if (!dim.is(TK::integer)) fail({"dimension", "']'"});
      advance();
      const long long v = std::strtoll(dim.text.c_str(), nullptr, 10);
      if (v < 0) throw ParseError("negative dimension " + dim.text, dim.pos);
      type.dims.push_back(v);
      if (peek().is(TK::comma)) {
        advance();
      } else if (!peek().is(TK::rbrack)) {
        fail({"','", "']'"});
      }
    }
    advance();
    return type;
  }

  Binder binder() {
    const Token& t = peek();
    if (!is_name_token(t)) fail({"binder"});
    advance();
    std::optional<ShapedType> type;
    if (peek().is(TK::colon)) {
      advance();
      type = shaped_type();
    }
    if (t.is(TK::underscore)) return Binder::drop(std::move(type));
    return Binder::named(t.text, std::move(type));
  }

  Binder header_binder(std::vector<std::string> expected) {
    if (!is_name_token(peek())) fail(std::move(expected));
    Binder b = binder();
    if (!b.dropped) scopes_.back().insert(b.name);
    return b;
  }

  static bool resolves_shared(const std::string& key) {
    return key == "branches" ||
           (key.size() >= 5 && key.compare(key.size() - 5, 5, "jaxpr") == 0);
  }

  ParamValue value(const std::string& key) {
    const Token& t = peek();
    switch (t.kind) {
      case TK::lbrace: {
        auto nested = std::make_shared<const Program>(program());
        return ParamValue{NestedProgram{std::move(nested)}};
      }
      case TK::lparen:
      case TK::lbrack: {
        const bool square = t.is(TK::lbrack);
        const TK close = square ? TK::rbrack : TK::rparen;
        advance();
        ParamTuple tuple{{}, square};
        while (!peek().is(close)) {
          tuple.items.push_back(value(key));
          if (peek().is(TK::comma)) {
            advance();
          } else if (tuple.items.back().is_program() && peek().is(TK::lbrace)) {
            // Branch lists print one program per line without separators.
          } else if (!peek().is(close)) {
            fail({"','", square ? "']'" : "')'"});
          }
        }
        advance();
        return ParamValue{std::move(tuple)};
      }
      case TK::integer:
      case TK::floating:
      case TK::boolean:
        return ParamValue{literal()};
      case TK::opaque:
        return ParamValue{ParamOpaque{advance().text}};
      case TK::ident:
      case TK::keyword:
      case TK::underscore: {
        std::string name = advance().text;
        while (peek().is(TK::dot) && is_name_token(peek(1))) {
          advance();
          name += "." + advance().text;
        }
        if (peek().is(TK::lparen)) return call(std::move(name), key);
        if (resolves_shared(key)) {
          auto it = shared_.find(name);
          if (it != shared_.end()) return ParamValue{NestedProgram{it->second}};
        }
        return ParamValue{ParamSymbol{std::move(name)}};
      }
      default:
        fail({"parameter value"});
    }
  }

  ParamValue call(std::string callee, const std::string& key) {
    expect(TK::lparen, "'('");
    ParamCall c{std::move(callee), {}, {}};
    while (!peek().is(TK::rparen)) {
      std::string arg_key;
      if (peek().is(TK::ident) && peek(1).is(TK::equals)) {
        arg_key = advance().text;
        advance();
      }
      c.keys.push_back(std::move(arg_key));
      c.args.push_back(value(key));
      if (peek().is(TK::comma)) {
        advance();
      } else if (!peek().is(TK::rparen)) {
        fail({"','", "')'"});
      }
    }
    advance();
    return ParamValue{std::move(c)};
  }

  std::span<const Token> toks_;
  std::size_t pos_;
  std::vector<std::unordered_set<std::string>> scopes_;
  std::map<std::string, std::shared_ptr<const Program>> shared_;
};

}  // namespace

Parsed<Program> parse_program(std::span<const Token> tokens,
                              std::size_t cursor) {
  Parser parser(tokens, cursor);
  Program program = parser.program();
  return {std::move(program), parser.position()};
}

Parsed<Equation> parse_equation(std::span<const Token> tokens,
                                std::size_t cursor) {
  Parser parser(tokens, cursor);
  Equation eq = parser.equation();
  return {std::move(eq), parser.position()};
}

Parsed<ParamMap> parse_params(std::span<const Token> tokens,
                              std::size_t cursor) {
  Parser parser(tokens, cursor);
  ParamMap params = parser.params();
  return {std::move(params), parser.position()};
}

Program parse(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  return Parser(tokens, 0).toplevel();
}

}  // namespace jaxpr2py
