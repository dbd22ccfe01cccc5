#include <sstream>

#include "jaxpr2py/ir.hpp"

namespace jaxpr2py {

namespace {

void print_type(std::ostream& os, const ShapedType& type) {
  os << to_string(type.dtype) << '[';
  for (std::size_t i = 0; i < type.dims.size(); ++i) {
    if (i) os << ',';
    os << type.dims[i];
  }
  os << ']';
}

void print_binder(std::ostream& os, const Binder& binder) {
  os << (binder.dropped ? std::string("_") : binder.name);
  if (binder.type) {
    os << ':';
    print_type(os, *binder.type);
  }
}

void print_literal(std::ostream& os, const Literal& literal) {
  os << literal.source_text;
  if (literal.type) {
    os << ':';
    print_type(os, *literal.type);
  }
}

void print_atom(std::ostream& os, const Atom& atom) {
  if (atom.is_var()) {
    os << atom.var_name();
  } else {
    print_literal(os, atom.literal());
  }
}

void print_program(std::ostream& os, const Program& program, int depth);

void print_value(std::ostream& os, const ParamValue& value, int depth) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Literal>) {
          print_literal(os, v);
        } else if constexpr (std::is_same_v<T, ParamSymbol>) {
          os << v.text;
        } else if constexpr (std::is_same_v<T, ParamOpaque>) {
          os << v.text;
        } else if constexpr (std::is_same_v<T, ParamTuple>) {
          os << (v.square ? '[' : '(');
          for (std::size_t i = 0; i < v.items.size(); ++i) {
            if (i) os << ", ";
            print_value(os, v.items[i], depth);
          }
          if (!v.square && v.items.size() == 1) os << ',';
          os << (v.square ? ']' : ')');
        } else if constexpr (std::is_same_v<T, ParamCall>) {
          os << v.callee << '(';
          for (std::size_t i = 0; i < v.args.size(); ++i) {
            if (i) os << ", ";
            if (!v.keys[i].empty()) os << v.keys[i] << '=';
            print_value(os, v.args[i], depth);
          }
          os << ')';
        } else {
          print_program(os, *v.program, depth + 1);
        }
      },
      value.value);
}

void print_program(std::ostream& os, const Program& program, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
  os << "{ lambda";
  for (const auto& b : program.constvars) {
    os << ' ';
    print_binder(os, b);
  }
  os << " ;";
  for (const auto& b : program.invars) {
    os << ' ';
    print_binder(os, b);
  }
  os << ". let\n";
  for (const auto& eq : program.equations) {
    os << pad << "    ";
    for (std::size_t i = 0; i < eq.outputs.size(); ++i) {
      if (i) os << ' ';
      print_binder(os, eq.outputs[i]);
    }
    if (!eq.outputs.empty()) os << " = ";
    os << eq.primitive;
    if (!eq.params.empty() || eq.outputs.empty()) {
      os << '[';
      for (std::size_t i = 0; i < eq.params.size(); ++i) {
        if (i) os << ' ';
        os << eq.params[i].first << '=';
        print_value(os, eq.params[i].second, depth + 1);
      }
      os << ']';
    }
    for (const auto& atom : eq.inputs) {
      os << ' ';
      print_atom(os, atom);
    }
    os << '\n';
  }
  os << pad << "  in (";
  for (std::size_t i = 0; i < program.outputs.size(); ++i) {
    if (i) os << ", ";
    print_atom(os, program.outputs[i]);
  }
  if (program.outputs.size() == 1) os << ',';
  os << ") }";
}

}  // namespace

std::string pretty_print(const Program& program) {
  std::ostringstream os;
  print_program(os, program, 0);
  os << '\n';
  return os.str();
}

std::string pretty_print(const ParamValue& value) {
  std::ostringstream os;
  print_value(os, value, 0);
  return os.str();
}

}  // namespace jaxpr2py
