#pragma once

#include <set>
#include <string>
#include <vector>

namespace jaxpr2py {

/// Import statements required by the translated body. Membership is exact
/// string equality; emission order is lexicographic.
class ImportSet {
 public:
  /// Idempotent.
  void require(std::string line);

  bool contains(const std::string& line) const { return lines_.count(line) > 0; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }

  std::vector<std::string> emit() const;

 private:
  std::set<std::string> lines_;
};

}  // namespace jaxpr2py
