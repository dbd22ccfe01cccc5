#include <doctest.h>

#include <cctype>

#include "jaxpr2py/lexer.hpp"
#include "support.hpp"

using namespace jaxpr2py;
using TK = TokenKind;

namespace {

std::vector<TK> kinds(std::string_view src) {
  std::vector<TK> out;
  for (const auto& t : tokenize(src)) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("binder with scalar type") {
  auto toks = tokenize("b:f32[] = exp a");
  CHECK(kinds("b:f32[] = exp a") ==
        std::vector<TK>{TK::ident, TK::colon, TK::ident, TK::lbrack, TK::rbrack,
                        TK::equals, TK::ident, TK::ident, TK::eof});
  CHECK(toks[0].text == "b");
  CHECK(toks[2].text == "f32");
  CHECK(toks[6].text == "exp");
}

TEST_CASE("float literal operand") {
  auto toks = tokenize("add 1.0 b");
  REQUIRE(toks.size() == 4);
  CHECK(toks[1].kind == TK::floating);
  CHECK(toks[1].text == "1.0");
}

TEST_CASE("empty input yields only eof") {
  auto toks = tokenize("");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].is(TK::eof));
  CHECK(tokenize("  \n\t ").size() == 1);
}

TEST_CASE("keywords, underscore and punctuation") {
  CHECK(kinds("{ lambda ; . let in ( ) , _ }") ==
        std::vector<TK>{TK::lbrace, TK::keyword, TK::semi, TK::dot, TK::keyword,
                        TK::keyword, TK::lparen, TK::rparen, TK::comma,
                        TK::underscore, TK::rbrace, TK::eof});
}

TEST_CASE("numbers") {
  auto toks = tokenize("3 -2 1e-05 -inf nan 2.5e3 True False");
  CHECK(toks[0].kind == TK::integer);
  CHECK(toks[1].kind == TK::integer);
  CHECK(toks[1].text == "-2");
  CHECK(toks[2].kind == TK::floating);
  CHECK(toks[3].kind == TK::floating);
  CHECK(toks[4].kind == TK::floating);
  CHECK(toks[5].kind == TK::floating);
  CHECK(toks[6].kind == TK::boolean);
  CHECK(toks[7].kind == TK::boolean);
}

TEST_CASE("hyphenated primitive names stay one identifier") {
  auto toks = tokenize("scatter-add a b");
  CHECK(toks[0].kind == TK::ident);
  CHECK(toks[0].text == "scatter-add");
}

TEST_CASE("opaque parameter values") {
  auto toks = tokenize("[bwd=<lambda> axis_name=<axis 0x7f>]");
  CHECK(toks[3].kind == TK::opaque);
  CHECK(toks[3].text == "<lambda>");
  CHECK(toks[6].text == "<axis 0x7f>");
}

TEST_CASE("positions are one-based lines and columns") {
  auto toks = tokenize("a\n  bb c");
  CHECK(toks[1].pos.line == 2);
  CHECK(toks[1].pos.col == 3);
  CHECK(toks[1].pos.offset == 4);
  CHECK(toks[2].pos.col == 6);
}

TEST_CASE("characters outside the alphabet are rejected") {
  CHECK_THROWS_AS(tokenize("a # comment"), LexError);
  CHECK_THROWS_AS(tokenize("a @ b"), LexError);
  try {
    tokenize("ab\n  $");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().col == 3);
  }
}

TEST_CASE("token texts occupy increasing, non-overlapping spans of the source") {
  for (const auto& path : testing::corpus_dumps()) {
    CAPTURE(path);
    const std::string src = testing::read_file(path);
    const auto toks = tokenize(src);
    std::size_t cursor = 0;
    for (const auto& t : toks) {
      if (t.is(TK::eof)) break;
      REQUIRE(t.pos.offset >= cursor);
      for (std::size_t i = cursor; i < t.pos.offset; ++i) {
        REQUIRE(std::isspace(static_cast<unsigned char>(src[i])));
      }
      REQUIRE(src.compare(t.pos.offset, t.text.size(), t.text) == 0);
      cursor = t.pos.offset + t.text.size();
    }
    for (std::size_t i = cursor; i < src.size(); ++i) {
      REQUIRE(std::isspace(static_cast<unsigned char>(src[i])));
    }
  }
}

TEST_CASE("tokenize is deterministic") {
  for (const auto& path : testing::corpus_dumps()) {
    const std::string src = testing::read_file(path);
    auto a = tokenize(src);
    auto b = tokenize(src);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].kind == b[i].kind);
      CHECK(a[i].text == b[i].text);
      CHECK(a[i].pos.offset == b[i].pos.offset);
    }
  }
}
