#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jaxpr2py::cli {

enum ExitCode : int {
  ok = 0,
  input_error = 1,        // usage, I/O, lexing and parsing
  translation_error = 2,  // strict-mode unknown or untranslatable operator
};

/// Runs the command line `args` (without the program name). Generated source
/// goes to `out` unless `--out` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace jaxpr2py::cli
