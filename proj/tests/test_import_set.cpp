#include <doctest.h>

#include <algorithm>
#include <random>

#include "jaxpr2py/import_set.hpp"

using namespace jaxpr2py;

TEST_CASE("duplicates collapse") {
  ImportSet s;
  s.require("from jax.numpy import *");
  s.require("from jax.numpy import *");
  CHECK(s.size() == 1);
  CHECK(s.emit() == std::vector<std::string>{"from jax.numpy import *"});
}

TEST_CASE("empty set emits nothing") {
  ImportSet s;
  CHECK(s.empty());
  CHECK(s.emit().empty());
}

TEST_CASE("distinct lines are kept and sorted") {
  ImportSet s;
  s.require("from jax.numpy import *");
  s.require("from jax import lax");
  CHECK(s.contains("from jax import lax"));
  CHECK_FALSE(s.contains("from jax import  lax"));
  CHECK(s.emit() ==
        std::vector<std::string>{"from jax import lax", "from jax.numpy import *"});
}

TEST_CASE("require is idempotent and emit is sorted and duplicate-free") {
  const std::vector<std::string> lines = {
      "from jax.numpy import *", "from jax import lax", "from jax import vmap",
      "from jax.scipy.special import erf", "from numpy import *",
      "from scipy.special import gammaln"};
  std::mt19937 rng(11);
  for (int round = 0; round < 100; ++round) {
    ImportSet s;
    for (int i = 0; i < 12; ++i) s.require(lines[rng() % lines.size()]);
    const auto before = s.emit();
    const std::string again = lines[rng() % lines.size()];
    ImportSet once = s, twice = s;
    once.require(again);
    twice.require(again);
    twice.require(again);
    CHECK(once.emit() == twice.emit());
    CHECK(std::is_sorted(before.begin(), before.end()));
    CHECK(std::adjacent_find(before.begin(), before.end()) == before.end());
  }
}
