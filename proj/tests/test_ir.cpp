#include <doctest.h>

#include <set>

#include "jaxpr2py/ir.hpp"
#include "jaxpr2py/parser.hpp"
#include "support.hpp"

using namespace jaxpr2py;

namespace {

Binder f32(const std::string& name) {
  return Binder::named(name, ShapedType{DType::f32, {}});
}

Equation eq(std::vector<Binder> outs, std::string prim, std::vector<Atom> ins) {
  return Equation{std::move(outs), std::move(prim), {}, std::move(ins)};
}

void collect_bound(const Program& p, std::set<std::string>& bound,
                   std::size_t& count) {
  for (const auto& b : p.constvars) bound.insert(b.name), ++count;
  for (const auto& b : p.invars) bound.insert(b.name), ++count;
  for (const auto& e : p.equations) {
    for (const auto& b : e.outputs) {
      if (!b.dropped) bound.insert(b.name), ++count;
    }
  }
}

}  // namespace

TEST_CASE("dtype spellings") {
  for (const char* name : {"f16", "bf16", "f32", "f64", "i8", "i16", "i32", "i64",
                           "u8", "u16", "u32", "u64", "bool"}) {
    auto dt = dtype_from_string(name);
    REQUIRE(dt);
    CHECK(to_string(*dt) == name);
  }
  CHECK_FALSE(dtype_from_string("f33"));
  CHECK_FALSE(dtype_from_string(""));
  CHECK_FALSE(dtype_from_string("float32"));
}

TEST_CASE("literals") {
  CHECK(Literal::floating(-1.5, "-1.5").is_negative());
  CHECK_FALSE(Literal::integer(0, "0").is_negative());
  CHECK(Literal::floating(1.0 / 0.0, "inf").is_special_float());
  CHECK_FALSE(Literal::floating(2.0, "2.0").is_special_float());
  CHECK(Literal::boolean(true).source_text == "True");
}

TEST_CASE("validate the gf program") {
  CHECK(validate(parse(testing::kGfDump)).ok());
}

TEST_CASE("validate the identity program") {
  Program p;
  p.invars = {f32("a")};
  p.outputs = {Atom::var("a")};
  CHECK(validate(p).ok());
}

TEST_CASE("undefined variable is reported with its equation") {
  Program p;
  p.invars = {f32("a")};
  p.equations = {eq({f32("b")}, "exp", {Atom::var("z")})};
  p.outputs = {Atom::var("b")};
  auto result = validate(p);
  REQUIRE(result.violations.size() == 1);
  CHECK(result.violations[0].equation == std::optional<std::size_t>(0));
  CHECK(result.violations[0].message == "undefined variable z at equation 0");
}

TEST_CASE("use before definition") {
  Program p;
  p.invars = {f32("a")};
  p.equations = {eq({f32("b")}, "exp", {Atom::var("c")}),
                 eq({f32("c")}, "exp", {Atom::var("a")})};
  p.outputs = {Atom::var("b")};
  auto result = validate(p);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violations[0].equation == std::optional<std::size_t>(0));
}

TEST_CASE("duplicate binders") {
  Program p;
  p.invars = {f32("a")};
  p.equations = {eq({f32("a")}, "exp", {Atom::var("a")})};
  p.outputs = {Atom::var("a")};
  CHECK_FALSE(validate(p).ok());
}

TEST_CASE("dropped binders may repeat but are never read") {
  Program p;
  p.invars = {f32("a")};
  p.equations = {eq({Binder::drop()}, "log", {Atom::var("a")}),
                 eq({Binder::drop()}, "exp", {Atom::var("a")})};
  p.outputs = {Atom::var("a")};
  CHECK(validate(p).ok());

  p.outputs = {Atom::var("_")};
  CHECK_FALSE(validate(p).ok());
}

TEST_CASE("undefined output") {
  Program p;
  p.invars = {f32("a")};
  p.outputs = {Atom::var("q")};
  auto result = validate(p);
  REQUIRE(result.violations.size() == 1);
  CHECK_FALSE(result.violations[0].equation);
}

TEST_CASE("nested programs are closed scopes") {
  auto inner = std::make_shared<Program>();
  inner->invars = {f32("x")};
  inner->outputs = {Atom::var("a")};  // a belongs to the outer scope
  Program p;
  p.invars = {f32("a")};
  Equation call = eq({f32("b")}, "pjit", {Atom::var("a")});
  call.params.push_back({"jaxpr", ParamValue{NestedProgram{inner}}});
  p.equations = {call};
  p.outputs = {Atom::var("b")};
  CHECK_FALSE(validate(p).ok());

  inner->outputs = {Atom::var("x")};
  CHECK(validate(p).ok());

  // Shadowing an outer name inside the nested scope is fine.
  inner->invars = {f32("a")};
  inner->outputs = {Atom::var("a")};
  CHECK(validate(p).ok());
}

TEST_CASE("validate is pure") {
  Program bad;
  bad.invars = {f32("a")};
  bad.equations = {eq({f32("b")}, "exp", {Atom::var("z")}),
                   eq({f32("b")}, "exp", {Atom::var("a")})};
  bad.outputs = {Atom::var("y")};
  const auto first = validate(bad);
  CHECK(first.violations.size() == 3);
  CHECK(validate(bad) == first);
}

TEST_CASE("bound names are unique and cover every referenced variable") {
  for (const auto& path : testing::corpus_dumps()) {
    CAPTURE(path);
    const Program p = parse(testing::read_file(path));
    std::set<std::string> bound;
    std::size_t count = 0;
    collect_bound(p, bound, count);
    CHECK(bound.size() == count);
    for (const auto& e : p.equations) {
      for (const auto& a : e.inputs) {
        if (a.is_var()) CHECK(bound.count(a.var_name()));
      }
    }
    for (const auto& a : p.outputs) {
      if (a.is_var()) CHECK(bound.count(a.var_name()));
    }
  }
}

TEST_CASE("pretty printer") {
  CHECK(pretty_print(parse("{ lambda ; a:f32[]. let in (a,) }")) ==
        "{ lambda ; a:f32[]. let\n  in (a,) }\n");
  CHECK(pretty_print(parse(
            "{ lambda c:f32[2]; a:f32[] b:i32[]. let d:f32[] = exp a "
            "_:f32[] = cond[branches=({ lambda ; x:f32[]. let in (x,) },) "
            "k=(1, 2) m=-1.0:f32[] s=float32] b a in (d, 1.0) }")) ==
        "{ lambda c:f32[2] ; a:f32[] b:i32[]. let\n"
        "    d:f32[] = exp a\n"
        "    _:f32[] = cond[branches=({ lambda ; x:f32[]. let\n"
        "          in (x,) },) k=(1, 2) m=-1.0:f32[] s=float32] b a\n"
        "  in (d, 1.0) }\n");
}
