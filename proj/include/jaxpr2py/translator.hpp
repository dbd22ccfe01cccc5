#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jaxpr2py/config.hpp"
#include "jaxpr2py/import_set.hpp"
#include "jaxpr2py/ir.hpp"
#include "jaxpr2py/renamer.hpp"

namespace jaxpr2py {

/// Emitted lines for one equation. Lines are relative to the enclosing
/// function body; nested blocks carry their own extra indentation.
using Statements = std::vector<std::string>;

class TranslationContext;

using RenderFn =
    std::function<Statements(const Equation&, TranslationContext&)>;

struct OperatorRule {
  std::string primitive;
  RenderFn render;
};

class OperatorRegistry {
 public:
  /// Later registrations for the same primitive replace earlier ones.
  void add(OperatorRule rule);
  const RenderFn* find(std::string_view primitive) const;

  std::size_t size() const { return rules_.size(); }
  std::vector<std::string> primitives() const;

 private:
  std::map<std::string, RenderFn, std::less<>> rules_;
};

OperatorRegistry register_rule(OperatorRule rule, OperatorRegistry registry);

/// The shipped rule set. Immutable and safe to share between threads.
const OperatorRegistry& builtin_registry();

struct HelperDef {
  std::string name;
  std::vector<std::string> lines;  // complete `def` block, unindented
};

struct DecompileReport {
  /// Primitives replaced by placeholders in lenient mode, first-seen order.
  std::vector<std::string> unsupported;
};

/// State of one decompilation. The NameEnv and type table belong to the
/// function currently being emitted; helpers, imports and the report are
/// shared by every scope of the decompilation.
class TranslationContext {
 public:
  TranslationContext(const OperatorRegistry& registry, EmitConfig config);

  const EmitConfig& config() const { return config_; }
  Dialect dialect() const { return config_.dialect; }
  bool framework() const { return config_.dialect == Dialect::framework_numpy; }
  const std::string& indent() const { return config_.indent; }
  const OperatorRegistry& registry() const { return *registry_; }

  NameEnv& env() { return env_; }
  ImportSet& imports() { return imports_; }
  const ImportSet& imports() const { return imports_; }
  std::size_t helper_counter() const { return helper_counter_; }
  const std::vector<HelperDef>& helpers() const { return helpers_; }
  const DecompileReport& report() const { return report_; }
  void note_unsupported(const std::string& primitive);

  /// Starts a fresh function scope for `program`: new NameEnv, type table
  /// filled from its binders, and its IR names avoided by temporaries.
  void enter_scope(const Program& program);

  // Rendering helpers for rules.

  /// Star import of the dialect's array namespace; returns `fn(args)`.
  std::string call(std::string_view fn, const std::string& args);
  /// `lax.fn(args)`; only meaningful for the framework dialect.
  std::string lax(std::string_view fn, const std::string& args);
  void require_star();
  void require(std::string import_line) { imports_.require(std::move(import_line)); }

  /// Input atom as an expression: sanitized variable or literal spelling.
  std::string operand(const Atom& atom);
  /// Same, with negative literals parenthesized (unary minus, `**` base).
  std::string operand_tight(const Atom& atom);
  std::vector<std::string> operands(const Equation& eq);

  /// Binds the equation's output binders and returns the emitted names.
  std::vector<std::string> bind_outputs(const Equation& eq);
  std::string bind(const Binder& binder);

  std::optional<ShapedType> type_of(const Atom& atom) const;

  std::unordered_map<const Program*, std::string>& lifted() { return lifted_; }
  std::string next_helper_name();
  void add_helper(HelperDef def) { helpers_.push_back(std::move(def)); }

  /// Swaps the per-scope state with `other`, used when lifting.
  struct Scope {
    NameEnv env;
    std::unordered_map<std::string, ShapedType> types;
  };
  Scope swap_scope(Scope next);

 private:
  const OperatorRegistry* registry_;
  EmitConfig config_;
  NameEnv env_;
  std::unordered_map<std::string, ShapedType> types_;
  ImportSet imports_;
  std::size_t helper_counter_ = 0;
  std::vector<HelperDef> helpers_;
  std::unordered_map<const Program*, std::string> lifted_;
  DecompileReport report_;
};

/// Translates one equation through the registry. Unknown primitives raise
/// UnknownOperator in strict mode; in lenient mode a marked comment is
/// emitted and the primitive is recorded in the report.
Statements translate_equation(const Equation& eq, TranslationContext& ctx);

/// Decompiles a nested program into a helper function `fn_<k>` and returns
/// its name. A program object lifted before is not lifted again.
std::string lift_program(const Program& nested, TranslationContext& ctx);

/// Full `def name(params):` block for `program` in the current context,
/// translated in a fresh scope. Constant binders become trailing parameters
/// when `allow_consts` is set.
std::vector<std::string> translate_function(const std::string& name,
                                            const Program& program,
                                            TranslationContext& ctx,
                                            bool allow_consts);

// Statement helpers shared by the rule files.

/// `a, b = expr`, `a = expr`, or a bare expression when there are no targets.
std::string assign(const std::vector<std::string>& targets,
                   const std::string& expr);
std::string join(const std::vector<std::string>& parts,
                 std::string_view sep = ", ");
/// Python tuple display: `()`, `(a,)`, `(a, b)`.
std::string py_tuple(const std::vector<std::string>& items);

}  // namespace jaxpr2py
