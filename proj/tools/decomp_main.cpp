#include <iostream>
#include <string>
#include <vector>

#include "jaxpr2py/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jaxpr2py::cli::run(args, std::cin, std::cout, std::cerr);
}
