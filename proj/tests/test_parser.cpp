#include <doctest.h>

#include "jaxpr2py/parser.hpp"
#include "support.hpp"

using namespace jaxpr2py;

TEST_CASE("gf dump") {
  Program p = parse(testing::kGfDump);
  REQUIRE(p.invars.size() == 1);
  CHECK(p.invars[0].name == "a");
  CHECK(p.invars[0].type == ShapedType{DType::f32, {}});
  CHECK(p.constvars.empty());
  REQUIRE(p.equations.size() == 5);
  REQUIRE(p.outputs.size() == 1);
  CHECK(p.outputs[0] == Atom::var("e"));

  const Equation& log_eq = p.equations[2];
  REQUIRE(log_eq.outputs.size() == 1);
  CHECK(log_eq.outputs[0].dropped);
  CHECK(log_eq.outputs[0].type == ShapedType{DType::f32, {}});
  CHECK(log_eq.primitive == "log");
  CHECK(log_eq.inputs == std::vector<Atom>{Atom::var("c")});

  const Equation& mul = p.equations[4];
  CHECK(mul.primitive == "mul");
  CHECK(mul.inputs == std::vector<Atom>{Atom::var("d"), Atom::var("b")});

  const Equation& add = p.equations[1];
  REQUIRE_FALSE(add.inputs[0].is_var());
  CHECK(add.inputs[0].literal().source_text == "1.0");
}

TEST_CASE("identity and empty programs") {
  Program id = parse("{ lambda ; a:f32[]. let in (a,) }");
  CHECK(id.equations.empty());
  CHECK(id.outputs == std::vector<Atom>{Atom::var("a")});

  Program empty = parse("{ lambda ; . let in ( ) }");
  CHECK(empty.invars.empty());
  CHECK(empty.outputs.empty());
}

TEST_CASE("constant binders and shapes") {
  Program p = parse("{ lambda a:f32[2,3] b:i32[]; c:bool[4]. let in (a, b, c) }");
  REQUIRE(p.constvars.size() == 2);
  CHECK(p.constvars[0].type == ShapedType{DType::f32, {2, 3}});
  CHECK(p.constvars[1].type == ShapedType{DType::i32, {}});
  CHECK(p.invars[0].type == ShapedType{DType::boolean, {4}});
}

TEST_CASE("equation with two outputs") {
  const std::string src = "c:f32[2,3] b:i32[] = some_op x y";
  auto toks = tokenize(src);
  auto eq = parse_equation(toks, 0);
  REQUIRE(eq.value.outputs.size() == 2);
  CHECK(eq.value.outputs[0].type == ShapedType{DType::f32, {2, 3}});
  CHECK(eq.value.outputs[1].name == "b");
  CHECK(eq.value.primitive == "some_op");
  CHECK(eq.next == toks.size() - 1);

  Program p = parse("{ lambda ; x:f32[] y:f32[]. let " + src + " in (c, b) }");
  CHECK(parse(pretty_print(p)) == p);
}

TEST_CASE("parameter maps") {
  SUBCASE("nested tuple tree") {
    auto toks = tokenize("[dimension_numbers=(((1,), (0,)), ((), ()))]");
    auto params = parse_params(toks, 0);
    REQUIRE(params.value.size() == 1);
    CHECK(params.value[0].first == "dimension_numbers");
    const auto& tree = std::get<ParamTuple>(params.value[0].second.value);
    REQUIRE(tree.items.size() == 2);
    const auto& contracting = std::get<ParamTuple>(tree.items[0].value);
    REQUIRE(contracting.items.size() == 2);
    const auto& lhs = std::get<ParamTuple>(contracting.items[0].value);
    REQUIRE(lhs.items.size() == 1);
    CHECK(std::get<Literal>(lhs.items[0].value).source_text == "1");
    CHECK(std::get<ParamTuple>(tree.items[1].value).items.size() == 2);
    CHECK(nesting_depth(params.value[0].second) == 3);
  }
  SUBCASE("tuple holding a nested program") {
    auto toks = tokenize(
        "[branches=( { lambda ; a:f32[]. let b:f32[] = exp a in (b,) } )]");
    auto params = parse_params(toks, 0);
    REQUIRE(params.value.size() == 1);
    const auto& branches = std::get<ParamTuple>(params.value[0].second.value);
    REQUIRE(branches.items.size() == 1);
    REQUIRE(branches.items[0].is_program());
    const Program& inner = branches.items[0].program();
    CHECK(inner.equations.size() == 1);
    CHECK(validate(inner).ok());
  }
  SUBCASE("empty brackets") {
    auto toks = tokenize("[]");
    auto params = parse_params(toks, 0);
    CHECK(params.value.empty());
    CHECK(params.next == 2);
  }
  SUBCASE("symbols, calls, square lists and opaque values") {
    auto toks = tokenize(
        "[a=float32 b=np.int64(3) c=[1, 2] d=<lambda> "
        "e=GatherDimensionNumbers(offset_dims=(1,), collapsed_slice_dims=(0,)) f=None]");
    auto params = parse_params(toks, 0).value;
    REQUIRE(params.size() == 6);
    CHECK(std::get<ParamSymbol>(params[0].second.value).text == "float32");
    const auto& call = std::get<ParamCall>(params[1].second.value);
    CHECK(call.callee == "np.int64");
    CHECK(call.keys == std::vector<std::string>{""});
    CHECK(std::get<ParamTuple>(params[2].second.value).square);
    CHECK(std::get<ParamOpaque>(params[3].second.value).text == "<lambda>");
    const auto& dims = std::get<ParamCall>(params[4].second.value);
    CHECK(dims.keys == std::vector<std::string>{"offset_dims", "collapsed_slice_dims"});
    CHECK(std::get<ParamSymbol>(params[5].second.value).text == "None");
  }
}

TEST_CASE("parameter nesting depth matches bracket depth") {
  const std::pair<const char*, std::size_t> cases[] = {
      {"[k=1]", 0},
      {"[k=(1, 2)]", 1},
      {"[k=((1,), ())]", 2},
      {"[k=[[[]]]]", 3},
      {"[k=((((0,),),),)]", 4},
  };
  for (const auto& [src, depth] : cases) {
    CAPTURE(src);
    auto toks = tokenize(src);
    auto params = parse_params(toks, 0).value;
    CHECK(nesting_depth(params.at(0).second) == depth);
  }
}

TEST_CASE("shared sub-program preamble resolves to one instance") {
  Program p = parse(
      "let inner = { lambda ; x:f32[]. let y:f32[] = sin x in (y,) } in "
      "{ lambda ; a:f32[]. let b:f32[] = pjit[jaxpr=inner name=g] a; "
      "c:f32[] = pjit[jaxpr=inner name=g] b in (c,) }");
  REQUIRE(p.equations.size() == 2);
  const auto& first = std::get<NestedProgram>(p.equations[0].param("jaxpr")->value);
  const auto& second = std::get<NestedProgram>(p.equations[1].param("jaxpr")->value);
  CHECK(first.program.get() == second.program.get());
}

TEST_CASE("semicolons and comma-less branch tuples") {
  Program p = parse(
      "{ lambda ; i:i32[] a:f32[]. let b:f32[] = cond[branches=("
      "{ lambda ; x:f32[]. let y:f32[] = erf x; z:f32[] = neg y in (z,) } "
      "{ lambda ; x:f32[]. let  in (x,) })] i a in (b,) }");
  const auto& branches = std::get<ParamTuple>(p.equations[0].param("branches")->value);
  REQUIRE(branches.items.size() == 2);
  CHECK(branches.items[0].program().equations.size() == 2);
}

TEST_CASE("zero-input and zero-output equations") {
  Program p = parse(
      "{ lambda ; . let a:i32[3] = iota[dimension=0 dtype=int32 shape=(3,) sharding=None] ; "
      "debug_callback[callback=<fn>] a in (a,) }");
  REQUIRE(p.equations.size() == 2);
  CHECK(p.equations[0].inputs.empty());
  CHECK(p.equations[1].outputs.empty());
  CHECK(parse(pretty_print(p)) == p);
}

TEST_CASE("keyword-named variables are ordinary identifiers") {
  Program p = parse("{ lambda ; in:f32[] is:f32[]. let if:f32[] = add in is in (if,) }");
  CHECK(p.invars[0].name == "in");
  CHECK(p.equations[0].outputs[0].name == "if");
}

TEST_CASE("malformed dumps") {
  SUBCASE("truncated dump fails at end of input") {
    const std::string src = "{ lambda ; a:f32[]. let";
    try {
      parse(src);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.pos().offset == src.size());
    }
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse(""), ParseError); }
  SUBCASE("unknown dtype") {
    CHECK_THROWS_AS(parse("{ lambda ; a:f33[]. let in (a,) }"), ParseError);
  }
  SUBCASE("undefined variable") {
    CHECK_THROWS_AS(parse("{ lambda ; a:f32[]. let b:f32[] = exp z in (b,) }"),
                    ParseError);
  }
  SUBCASE("trailing tokens") {
    CHECK_THROWS_AS(parse("{ lambda ; a:f32[]. let in (a,) } x"), ParseError);
  }
  SUBCASE("negative dimension") {
    CHECK_THROWS_AS(parse("{ lambda ; a:f32[-1]. let in (a,) }"), ParseError);
  }
}

TEST_CASE("parse errors point inside the input") {
  const char* bad[] = {
      "{",
      "{ lambda",
      "{ lambda ; a:f32[]. let b:f32[] = exp[k= a in (b,) }",
      "{ lambda ; a:f32[]. let b:f32[] = exp a in (b, }",
      "{ lambda ; a:f32[] let in (a,) }",
      "( )",
      "{ lambda ; a:f32[]. let a:f32[] = exp a in (a,) }",
  };
  for (const std::string src : bad) {
    CAPTURE(src);
    try {
      parse(src);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.pos().offset <= src.size());
    }
  }
}

TEST_CASE("round trip over the corpus reaches a fixed point") {
  const auto dumps = testing::corpus_dumps();
  REQUIRE(dumps.size() >= 30);
  for (const auto& path : dumps) {
    CAPTURE(path);
    const Program first = parse(testing::read_file(path));
    const std::string printed = pretty_print(first);
    const Program second = parse(printed);
    CHECK(second == first);
    CHECK(pretty_print(second) == printed);
  }
}
