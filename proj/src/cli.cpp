#include "jaxpr2py/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "jaxpr2py/emitter.hpp"
#include "jaxpr2py/errors.hpp"

namespace jaxpr2py::cli {

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompile a Jaxpr text dump into Python source", "decomp"};
  std::string in_path = "-";
  std::string out_path;
  std::string dialect = "framework-numpy";
  bool lenient = false;
  int indent = 4;
  EmitConfig config;
  app.add_option("--in", in_path, "Input dump file, or - for standard input")
      ->capture_default_str();
  app.add_option("--out", out_path, "Output file (default: standard output)");
  app.add_option("--fn-name", config.function_name, "Name of the generated function")
      ->capture_default_str();
  app.add_option("--dialect", dialect, "Target dialect")
      ->check(CLI::IsMember({"framework-numpy", "plain-numpy"}))
      ->capture_default_str();
  app.add_flag("--lenient", lenient,
               "Emit placeholders for unsupported operators instead of failing");
  app.add_option("--indent", indent, "Spaces per indentation level")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "decomp: " << e.what() << "\n";
    return input_error;
  }

  config.dialect = *dialect_from_string(dialect);
  config.strict = !lenient;
  config.indent = std::string(static_cast<std::size_t>(indent), ' ');

  std::string source;
  if (in_path == "-") {
    source.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(in_path, std::ios::binary);
    if (!file) {
      err << "decomp: cannot open input file '" << in_path << "'\n";
      return input_error;
    }
    source.assign(std::istreambuf_iterator<char>(file), {});
  }

  Decompilation result;
  try {
    result = decompile(source, config);
  } catch (const LexError& e) {
    err << "decomp: " << in_path << ": lex error: " << e.what() << "\n";
    return input_error;
  } catch (const ParseError& e) {
    err << "decomp: " << in_path << ": parse error: " << e.what() << "\n";
    return input_error;
  } catch (const TranslationError& e) {
    err << "decomp: " << in_path << ": " << e.what() << "\n";
    return translation_error;
  } catch (const DecompileError& e) {
    err << "decomp: " << e.what() << "\n";
    return input_error;
  }

  if (!result.report.unsupported.empty()) {
    err << "decomp: warning: placeholders emitted for:";
    for (const auto& p : result.report.unsupported) err << ' ' << p;
    err << "\n";
  }

  if (out_path.empty()) {
    out << result.source;
    out.flush();
    return ok;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  file << result.source;
  if (!file.flush()) {
    err << "decomp: cannot write output file '" << out_path << "'\n";
    return input_error;
  }
  return ok;
}

}  // namespace jaxpr2py::cli
