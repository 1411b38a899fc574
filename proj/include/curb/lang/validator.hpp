#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curb/lang/ast.hpp"
#include "curb/lang/lexer.hpp"
#include "curb/state.hpp"

namespace curb::lang {

enum class ValueType { Int, Bool };

std::string_view to_string(ValueType type);

/// Type of the values a rule reads from and emits into the domain.
ValueType value_type_of(const StateDomain& domain);

/// Identifiers visible at some program point, outermost first.
using TypeEnv = std::vector<std::pair<std::string, ValueType>>;

/// Static type of an expression. Enforces identifier binding, operand types
/// and constant milieu index bounds; throws ValidationError.
ValueType type_of(const Expr& expr, const StateDomain& domain, std::size_t milieu_count, const TypeEnv& env);

/// Non-throwing form of type_of.
std::optional<ValueType> try_type_of(const Expr& expr, const StateDomain& domain, std::size_t milieu_count,
                                     const TypeEnv& env);

/// Conservative emit reachability: the last statement is an emit, or an
/// if/else whose branches both satisfy this rule.
bool always_emits(const Block& block);

/// A syntax tree that passed validation against a state domain and a milieu
/// size. Only `validate` creates one.
class RuleProgram {
 public:
  const Program& ast() const noexcept { return ast_; }
  const StateDomain& domain() const noexcept { return domain_; }
  std::size_t milieu_count() const noexcept { return milieu_count_; }
  std::size_t node_count() const noexcept { return node_count_; }

 private:
  friend RuleProgram validate(Program ast, const StateDomain& domain, std::size_t milieu_count);

  RuleProgram(Program ast, StateDomain domain, std::size_t milieu_count, std::size_t nodes)
      : ast_(std::move(ast)), domain_(domain), milieu_count_(milieu_count), node_count_(nodes) {}

  Program ast_;
  StateDomain domain_;
  std::size_t milieu_count_;
  std::size_t node_count_;
};

/// Checks, in program order:
///  - every identifier is `identifier<digits>`, bound once, and bound before use;
///  - operand types agree and emitted values have the domain's type;
///  - an emit is reached on every path (see always_emits);
///  - constant milieu indices lie in [0, milieu_count).
/// Throws ValidationError.
RuleProgram validate(Program ast, const StateDomain& domain, std::size_t milieu_count);

/// tokenize, parse and validate in one go.
RuleProgram compile(const RuleSource& source, const StateDomain& domain, std::size_t milieu_count);

}  // namespace curb::lang
