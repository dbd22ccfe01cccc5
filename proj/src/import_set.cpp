#include "jaxpr2py/import_set.hpp"

namespace jaxpr2py {

void ImportSet::require(std::string line) { lines_.insert(std::move(line)); }

std::vector<std::string> ImportSet::emit() const {
  return {lines_.begin(), lines_.end()};
}

}  // namespace jaxpr2py
