#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace jaxpr2py {

/// True for target-language keywords and soft keywords, for every bare name
/// the translation rules emit (imported functions, builtins, dtype names),
/// and for anything starting with the helper prefix `fn_`.
bool is_reserved_name(std::string_view name);

/// Per-scope naming state. One NameEnv covers one emitted function body.
class NameEnv {
 public:
  /// Binds an IR name and returns the emitted identifier. Reserved names
  /// become upper case; collisions with names already taken get trailing
  /// underscores until fresh.
  std::string sanitize(const std::string& ir_name);

  /// Name for a dropped (`_`) binder: `_`, then `_1`, `_2`, ...
  std::string fresh_dropped();

  /// Fresh identifier for a translator-introduced temporary. Never equal to
  /// a taken, reserved or avoided name.
  std::string fresh_temp(const std::string& base);

  /// Marks an IR name of the current scope so temporaries never use it.
  void avoid(const std::string& ir_name) { avoided_.insert(ir_name); }

  /// Emitted name of a previously bound IR name.
  std::optional<std::string> lookup(const std::string& ir_name) const;

  bool is_taken(const std::string& name) const {
    return taken_.count(name) > 0;
  }

 private:
  std::unordered_map<std::string, std::string> mapping_;
  std::unordered_set<std::string> taken_;
  std::unordered_set<std::string> avoided_;
  std::size_t dropped_count_ = 0;
};

}  // namespace jaxpr2py
