#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "jaxpr2py/cli.hpp"

namespace testing {

inline constexpr const char* kGfDump = R"({ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) })";

inline constexpr const char* kGf2Listing = R"(from jax.numpy import *

def gf2(a):
    b = exp(a)
    c = 1.0 + b
    _ = log(c)
    d = 1.0 / c
    e = d * b
    return e
)";

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(file), {}};
}

/// Every corpus/<case>/program.jaxpr, sorted by case name.
inline std::vector<std::filesystem::path> corpus_dumps() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(CORPUS_DIR)) {
    auto dump = entry.path() / "program.jaxpr";
    if (std::filesystem::exists(dump)) out.push_back(dump);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args,
                         const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = jaxpr2py::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace testing
