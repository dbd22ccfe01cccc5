#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

using testing::run_cli;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("gf listing on standard output") {
  auto path = temp_file("decomp_cli_gf.jaxpr", testing::kGfDump);
  auto r = run_cli({"--in", path.string(), "--fn-name", "gf2"});
  CHECK(r.code == 0);
  CHECK(r.out == testing::kGf2Listing);
  CHECK(r.err.empty());
}

TEST_CASE("standard input is the default") {
  auto r = run_cli({"--fn-name", "gf2"}, testing::kGfDump);
  CHECK(r.code == 0);
  CHECK(r.out == testing::kGf2Listing);
}

TEST_CASE("empty standard input is a parse error") {
  auto r = run_cli({"--in", "-"}, "");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("lex errors exit 1") {
  auto r = run_cli({}, "{ lambda ; a:f32[]. let # in (a,) }");
  CHECK(r.code == 1);
  CHECK(r.err.find("lex error") != std::string::npos);
}

TEST_CASE("unknown primitive exits 2 and names it") {
  auto r = run_cli({}, "{ lambda ; a:f32[]. let b:f32[] = frobnicate a in (b,) }");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("frobnicate") != std::string::npos);
}

TEST_CASE("dialect gaps exit 2") {
  auto r = run_cli({"--dialect", "plain-numpy"},
                   "{ lambda ; a:f32[2,5]. let b:f32[2,2] c:i32[2,2] = top_k[k=2] a in (b, c) }");
  CHECK(r.code == 2);
  CHECK(r.err.find("top_k") != std::string::npos);
}

TEST_CASE("lenient mode exits 0 and warns") {
  auto r = run_cli({"--lenient"}, "{ lambda ; a:f32[]. let b:f32[] = frobnicate a in (b,) }");
  CHECK(r.code == 0);
  CHECK(r.out.find("raise NotImplementedError(\"frobnicate\")") != std::string::npos);
  CHECK(r.err.find("frobnicate") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({"--dialect", "torch"}).code == 1);
  CHECK(run_cli({"--indent", "0"}).code == 1);
  CHECK(run_cli({"--bogus"}).code == 1);
  CHECK(run_cli({"--in", "/nonexistent/dir/x.jaxpr"}).code == 1);
  auto r = run_cli({"--fn-name", "lambda"}, testing::kGfDump);
  CHECK(r.code == 1);
  CHECK(r.out.empty());
}

TEST_CASE("help goes to standard output") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--dialect") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("output file and indent") {
  auto out = std::filesystem::temp_directory_path() / "decomp_cli_out.py";
  std::filesystem::remove(out);
  auto r = run_cli({"--out", out.string(), "--indent", "2"},
                   "{ lambda ; a:f32[]. let b:f32[] = neg a in (b,) }");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(testing::read_file(out) == "def f(a):\n  b = -a\n  return b\n");
  std::filesystem::remove(out);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const auto& path : testing::corpus_dumps()) {
    CAPTURE(path);
    for (const char* dialect : {"framework-numpy", "plain-numpy"}) {
      auto a = run_cli({"--in", path.string(), "--dialect", dialect});
      auto b = run_cli({"--in", path.string(), "--dialect", dialect});
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
      CHECK(a.err == b.err);
    }
  }
}
