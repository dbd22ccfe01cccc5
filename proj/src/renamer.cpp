#include "jaxpr2py/renamer.hpp"

#include <algorithm>
#include <iterator>
#include <cctype>

namespace jaxpr2py {
namespace {

// Keywords, soft keywords, builtins used by emitted code, and every bare
// function or dtype name any rule can emit.
constexpr std::string_view kReserved[] = {
    "False",        "None",         "True",        "abs",
    "all",          "and",          "any",         "arange",
    "arccos",       "arccosh",      "arcsin",      "arcsinh",
    "arctan",       "arctan2",      "arctanh",     "argmax",
    "argmin",       "argsort",      "as",          "asarray",
    "assert",       "async",        "await",       "bfloat16",
    "bool",         "bool_",        "break",       "broadcast_to",
    "case",         "cbrt",         "ceil",        "choose",
    "class",        "clip",         "complex64",   "complex128",
    "concatenate",  "conj",         "continue",    "copy",
    "cos",          "cosh",         "cumprod",     "cumsum",
    "def",          "del",          "digamma",     "einsum",
    "elif",         "else",         "enumerate",   "erf",
    "erfc",         "erfinv",       "except",      "exp",
    "exp2",         "expand_dims",  "expm1",       "finally",
    "flip",         "float",        "float16",     "float32",
    "float64",      "floor",        "fmod",        "for",
    "from",         "gammaln",      "global",      "if",
    "imag",         "import",       "in",          "inf",
    "int",          "int16",        "int32",       "int64",
    "int8",         "integer_pow",  "invert",      "is",
    "isfinite",     "lambda",       "lax",         "len",
    "list",         "log",          "log1p",       "logaddexp",
    "match",        "matmul",       "max",         "maximum",
    "min",          "minimum",      "nan",         "nextafter",
    "nonlocal",     "not",          "or",          "pad",
    "pass",         "power",        "print",       "prod",
    "raise",        "range",        "real",        "reshape",
    "return",       "reversed",     "round",       "scipy",
    "sign",         "sin",          "sinh",        "sort",
    "split",        "sqrt",         "square",      "squeeze",
    "stack",        "sum",          "take",        "take_along_axis",
    "tan",          "tanh",         "tensordot",   "transpose",
    "try",          "tuple",        "type",        "uint16",
    "uint32",       "uint64",       "uint8",       "vmap",
    "where",        "while",        "with",        "yield",
    "zeros",        "zeros_like",   "zip",         "ones",
};

bool in_reserved_table(std::string_view name) {
  return std::find(std::begin(kReserved), std::end(kReserved), name) != std::end(kReserved);
}

std::string to_upper(std::string text) {
  for (char& c : text) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return text;
}

}  // namespace

bool is_reserved_name(std::string_view name) {
  if (name.substr(0, 3) == "fn_") return true;
  return in_reserved_table(name);
}

std::string NameEnv::sanitize(const std::string& ir_name) {
  if (auto it = mapping_.find(ir_name); it != mapping_.end()) return it->second;

  std::string candidate = ir_name;
  std::replace(candidate.begin(), candidate.end(), '\'', '_');
  if (is_reserved_name(candidate)) candidate = to_upper(candidate);
  while (is_reserved_name(candidate) || taken_.count(candidate) > 0) {
    candidate += '_';
  }
  taken_.insert(candidate);
  mapping_.emplace(ir_name, candidate);
  return candidate;
}

std::string NameEnv::fresh_dropped() {
  std::string candidate;
  do {
    candidate = dropped_count_ == 0 ? std::string("_")
                                    : "_" + std::to_string(dropped_count_);
    ++dropped_count_;
  } while (taken_.count(candidate) > 0 || avoided_.count(candidate) > 0);
  taken_.insert(candidate);
  return candidate;
}

std::string NameEnv::fresh_temp(const std::string& base) {
  std::string candidate = base;
  for (int k = 2; is_reserved_name(candidate) || taken_.count(candidate) > 0 ||
                  avoided_.count(candidate) > 0;
       ++k) {
    candidate = base + std::to_string(k);
  }
  taken_.insert(candidate);
  return candidate;
}

std::optional<std::string> NameEnv::lookup(const std::string& ir_name) const {
  if (auto it = mapping_.find(ir_name); it != mapping_.end()) return it->second;
  return std::nullopt;
}

}  // namespace jaxpr2py
