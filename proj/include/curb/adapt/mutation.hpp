#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curb/adapt/identifier.hpp"
#include "curb/adapt/rng.hpp"
#include "curb/lang/ast.hpp"
#include "curb/lang/validator.hpp"
#include "curb/state.hpp"

namespace curb::adapt {

enum class MutationOperator {
  SubstituteLiteral,
  SubstituteOperator,
  SubstituteReference,
  InsertLet,
  DeleteUnusedLet,
  WrapInIf,
  UnwrapIf,
};

inline constexpr std::size_t kMutationOperatorCount = 7;

std::string_view to_string(MutationOperator op);

struct MutationPolicy {
  std::array<double, kMutationOperatorCount> weights{1, 1, 1, 1, 1, 1, 1};
  std::size_t max_retries = 16;
  std::size_t max_depth = 3;
  std::string identifier_stem{lang::Vocabulary::kIdentifierStem};

  double weight(MutationOperator op) const { return weights[static_cast<std::size_t>(op)]; }

  /// A policy that only ever draws `op`.
  static MutationPolicy only(MutationOperator op);

  /// Throws Usage for negative or all-zero weights or max_retries == 0.
  void check() const;
};

/// Expression operators mutation may introduce for a domain.
struct OperatorPool {
  std::vector<lang::ExprKind> kinds;

  bool contains(lang::ExprKind kind) const;
  friend bool operator==(const OperatorPool&, const OperatorPool&) = default;
};

/// Boolean domains: and, or, not, ==, !=. Integer domains add arithmetic and
/// ordering comparisons.
OperatorPool operator_pool(const StateDomain& domain);

/// Descends from the program's top-level block: `block` selects nested
/// blocks (statement index and branch), `statement` a statement there, and
/// `expr` operand indices from that statement's expression.
struct AstPath {
  struct Step {
    std::size_t statement = 0;
    bool else_branch = false;
    friend bool operator==(const Step&, const Step&) = default;
  };

  std::vector<Step> block;
  std::size_t statement = 0;
  std::vector<std::size_t> expr;

  std::string text() const;
  friend bool operator==(const AstPath&, const AstPath&) = default;
};

/// A structural change applied at a path.
struct Edit {
  enum class Kind {
    ReplaceExpr,       // expression at path.expr becomes `expr`
    InsertStatement,   // `statements` inserted before path.statement
    RemoveStatement,   // statement at path.statement removed
    ReplaceStatement,  // statement at path.statement replaced by `statements`
  };

  Kind kind = Kind::ReplaceExpr;
  AstPath path;
  lang::Expr expr;
  std::vector<lang::Stmt> statements;

  friend bool operator==(const Edit&, const Edit&) = default;
};

/// Audit record of one mutation. Replaying `edit` on the parent reproduces
/// the candidate.
struct MutationDescriptor {
  MutationOperator op = MutationOperator::SubstituteLiteral;
  AstPath path;
  std::string before;
  std::string after;
  std::uint64_t rng_draws = 0;
  Edit edit;

  friend bool operator==(const MutationDescriptor&, const MutationDescriptor&) = default;
};

struct Mutation {
  lang::Program candidate;
  MutationDescriptor descriptor;
};

/// Applies one edit; throws Usage when the path does not resolve.
lang::Program apply_edit(const lang::Program& parent, const Edit& edit);

inline lang::Program replay(const lang::Program& parent, const MutationDescriptor& descriptor) {
  return apply_edit(parent, descriptor.edit);
}

/// Draws an operator by weight and applies it. The candidate is not
/// validated here. Throws NoApplicableOperator when the drawn operator has no
/// site in the parent.
Mutation mutate(const lang::RuleProgram& parent, const MutationPolicy& policy, Rng& rng,
                IdentifierCounter& counter);

/// Applies the given operator.
Mutation mutate_with(MutationOperator op, const lang::RuleProgram& parent, const MutationPolicy& policy, Rng& rng,
                     IdentifierCounter& counter);

}  // namespace curb::adapt
