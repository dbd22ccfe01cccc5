#include "jaxpr2py/lexer.hpp"

#include <cctype>

namespace jaxpr2py {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lbrack: return "'['";
    case TokenKind::rbrack: return "']'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::colon: return "':'";
    case TokenKind::semi: return "';'";
    case TokenKind::dot: return "'.'";
    case TokenKind::comma: return "','";
    case TokenKind::equals: return "'='";
    case TokenKind::ident: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::floating: return "float";
    case TokenKind::boolean: return "boolean";
    case TokenKind::keyword: return "keyword";
    case TokenKind::underscore: return "'_'";
    case TokenKind::opaque: return "'<...>'";
    case TokenKind::eof: return "end of input";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_whitespace();
      if (at_end()) {
        tokens.push_back(Token{TokenKind::eof, "", pos_});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }

  void advance() {
    if (src_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++pos_.offset;
  }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  Token make(TokenKind kind, SourcePos start) const {
    return Token{kind,
                 std::string(src_.substr(start.offset,
                                         pos_.offset - start.offset)),
                 start};
  }

  Token next() {
    const SourcePos start = pos_;
    const char c = peek();
    auto single = [&](TokenKind kind) {
      advance();
      return make(kind, start);
    };
    switch (c) {
      case '{': return single(TokenKind::lbrace);
      case '}': return single(TokenKind::rbrace);
      case '[': return single(TokenKind::lbrack);
      case ']': return single(TokenKind::rbrack);
      case '(': return single(TokenKind::lparen);
      case ')': return single(TokenKind::rparen);
      case ':': return single(TokenKind::colon);
      case ';': return single(TokenKind::semi);
      case '.': return single(TokenKind::dot);
      case ',': return single(TokenKind::comma);
      case '=': return single(TokenKind::equals);
      case '<': return opaque(start);
      default: break;
    }
    if (is_digit(c)) return number(start);
    if (c == '-') {
      if (is_digit(peek(1))) return number(start);
      if (word_at(1, "inf") || word_at(1, "nan")) {
        advance();
        consume_word();
        return make(TokenKind::floating, start);
      }
      throw LexError("unexpected '-' not followed by a number", start);
    }
    if (is_ident_start(c)) return word(start);
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(
                                          static_cast<unsigned char>(c));
    throw LexError("unexpected character '" + shown + "'", start);
  }

  bool word_at(std::size_t ahead, std::string_view word) const {
    if (src_.substr(pos_.offset + ahead, word.size()) != word) return false;
    return !is_ident_char(peek(ahead + word.size()));
  }

  void consume_word() {
    while (!at_end() && is_ident_char(peek())) advance();
  }

  Token word(SourcePos start) {
    consume_word();
    // Hyphenated primitive names such as `scatter-add`.
    while (peek() == '-' && is_ident_start(peek(1))) {
      advance();
      consume_word();
    }
    Token tok = make(TokenKind::ident, start);
    const std::string& t = tok.text;
    if (t == "_") {
      tok.kind = TokenKind::underscore;
    } else if (t == "lambda" || t == "let" || t == "in") {
      tok.kind = TokenKind::keyword;
    } else if (t == "True" || t == "False") {
      tok.kind = TokenKind::boolean;
    } else if (t == "inf" || t == "nan") {
      tok.kind = TokenKind::floating;
    }
    return tok;
  }

  Token number(SourcePos start) {
    bool is_float = false;
    if (peek() == '-') advance();
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) ||
         ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      is_float = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    if (is_ident_char(peek())) {
      throw LexError("malformed number", start);
    }
    return make(is_float ? TokenKind::floating : TokenKind::integer, start);
  }

  Token opaque(SourcePos start) {
    int depth = 0;
    do {
      if (at_end() || peek() == '\n') {
        throw LexError("unterminated '<...>'", start);
      }
      if (peek() == '<') ++depth;
      if (peek() == '>') --depth;
      advance();
    } while (depth > 0);
    return make(TokenKind::opaque, start);
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace jaxpr2py
