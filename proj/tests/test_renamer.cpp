#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "jaxpr2py/renamer.hpp"

using namespace jaxpr2py;

TEST_CASE("reserved words") {
  for (const char* w : {"if", "in", "is", "lambda", "def", "return", "None", "True",
                        "match", "case", "type", "exp", "log", "lax", "vmap", "float32",
                        "bool_", "range", "fn_0", "fn_12", "fn_"}) {
    CAPTURE(w);
    CHECK(is_reserved_name(w));
  }
  for (const char* w : {"a", "b", "IN", "IS", "fn", "xs", "_1"}) {
    CAPTURE(w);
    CHECK_FALSE(is_reserved_name(w));
  }
}

TEST_CASE("sanitize") {
  NameEnv env;
  CHECK(env.sanitize("a") == "a");
  CHECK(env.sanitize("in") == "IN");
  CHECK(env.sanitize("a") == "a");  // same IR name, same identifier
  CHECK(env.lookup("in") == std::optional<std::string>("IN"));
  CHECK_FALSE(env.lookup("zz"));
}

TEST_CASE("collision with an already taken upper-case name") {
  NameEnv env;
  CHECK(env.sanitize("IS") == "IS");
  CHECK(env.sanitize("is") == "IS_");
}

TEST_CASE("collision chain and helper-prefixed names") {
  NameEnv env;
  CHECK(env.sanitize("IF") == "IF");
  CHECK(env.sanitize("IF_") == "IF_");
  CHECK(env.sanitize("if") == "IF__");
  CHECK(env.sanitize("fn_0") == "FN_0");
}

TEST_CASE("primes are not identifier characters") {
  NameEnv env;
  CHECK(env.sanitize("a'") == "a_");
  CHECK(env.sanitize("a_") == "a__");
}

TEST_CASE("dropped binders are numbered per scope") {
  NameEnv env;
  CHECK(env.fresh_dropped() == "_");
  CHECK(env.fresh_dropped() == "_1");
  CHECK(env.fresh_dropped() == "_2");
  NameEnv helper;
  CHECK(helper.fresh_dropped() == "_");
}

TEST_CASE("dropped names skip taken identifiers") {
  NameEnv env;
  env.sanitize("_1");
  CHECK(env.fresh_dropped() == "_");
  CHECK(env.fresh_dropped() == "_2");
}

TEST_CASE("temporaries avoid program names") {
  NameEnv env;
  env.avoid("step");
  env.sanitize("ys");
  CHECK(env.fresh_temp("step") == "step2");
  CHECK(env.fresh_temp("ys") == "ys2");
  CHECK(env.fresh_temp("ys") == "ys3");
  CHECK(env.fresh_temp("carry") == "carry");
  CHECK(env.is_taken("carry"));
  CHECK(env.fresh_temp("sin") == "sin2");
  CHECK(env.fresh_temp("exp") == "exp3");  // exp2 is an emitted function too
}

TEST_CASE("random sanitize sequences stay injective and never reserved") {
  const std::vector<std::string> pool = {
      "a", "b", "in", "IN", "IN_", "is", "IS", "if", "exp", "EXP", "fn_0", "FN_0",
      "lambda", "LAMBDA", "x'", "x_", "_1", "sum", "SUM", "f", "def", "DEF_"};
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    NameEnv env;
    std::map<std::string, std::string> seen;
    std::set<std::string> emitted;
    for (int i = 0; i < 30; ++i) {
      const std::string& ir = pool[rng() % pool.size()];
      const std::string out = env.sanitize(ir);
      CHECK_FALSE(is_reserved_name(out));
      if (auto it = seen.find(ir); it != seen.end()) {
        CHECK(it->second == out);
      } else {
        CHECK(emitted.insert(out).second);
        seen.emplace(ir, out);
      }
      if (rng() % 4 == 0) {
        const std::string d = env.fresh_dropped();
        CHECK(emitted.insert(d).second);
      }
      if (rng() % 5 == 0) {
        const std::string t = env.fresh_temp("carry");
        CHECK_FALSE(is_reserved_name(t));
        CHECK(emitted.insert(t).second);
      }
    }
  }
}

TEST_CASE("sanitize is deterministic given the same history") {
  const std::vector<std::string> names = {"in", "IN", "x", "IN_", "in", "is"};
  NameEnv a, b;
  for (const auto& n : names) CHECK(a.sanitize(n) == b.sanitize(n));
}
