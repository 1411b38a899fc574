#include "curb/lang/validator.hpp"

#include <algorithm>
#include <set>

#include "curb/lang/parser.hpp"

namespace curb::lang {

std::string_view to_string(ValueType type) { return type == ValueType::Int ? "int" : "bool"; }

ValueType value_type_of(const StateDomain& domain) {
  return domain.kind() == DomainKind::Boolean ? ValueType::Bool : ValueType::Int;
}

namespace {

[[noreturn]] void mismatch(const Expr& expr, std::string detail) {
  throw ValidationError(ValidationFailure::TypeMismatch,
                        "at \"" + std::string(spelling(expr.kind)) + "\": " + std::move(detail));
}

void require(const Expr& at, ValueType got, ValueType want, std::string_view role) {
  if (got != want) {
    mismatch(at, std::string(role) + " must be " + std::string(to_string(want)) + ", got " +
                     std::string(to_string(got)));
  }
}

std::optional<std::int64_t> constant_index(const Expr& index) {
  if (index.kind == ExprKind::IntLit) return index.value;
  if (index.kind == ExprKind::Neg && index.operands[0].kind == ExprKind::IntLit) return -index.operands[0].value;
  return std::nullopt;
}

}  // namespace

ValueType type_of(const Expr& expr, const StateDomain& domain, std::size_t milieu_count, const TypeEnv& env) {
  auto sub = [&](const Expr& e) { return type_of(e, domain, milieu_count, env); };
  switch (expr.kind) {
    case ExprKind::IntLit:
    case ExprKind::MilieuSum:
    case ExprKind::MilieuCount:
      return ValueType::Int;
    case ExprKind::BoolLit:
      return ValueType::Bool;
    case ExprKind::EntityState:
      return value_type_of(domain);
    case ExprKind::MilieuAt: {
      const Expr& index = expr.operands.at(0);
      require(expr, sub(index), ValueType::Int, "milieu index");
      if (auto k = constant_index(index)) {
        if (*k < 0 || static_cast<std::uint64_t>(*k) >= milieu_count) {
          throw ValidationError(ValidationFailure::MilieuIndexOutOfRange,
                                "milieu [ " + std::to_string(*k) + " ] with milieu size " +
                                    std::to_string(milieu_count));
        }
      }
      return value_type_of(domain);
    }
    case ExprKind::Ident: {
      if (!Vocabulary::is_generated_identifier(expr.name)) {
        throw ValidationError(ValidationFailure::BadIdentifier, "\"" + expr.name + "\"");
      }
      auto it = std::find_if(env.rbegin(), env.rend(), [&](const auto& b) { return b.first == expr.name; });
      if (it == env.rend()) {
        throw ValidationError(ValidationFailure::BadIdentifier, "\"" + expr.name + "\" used before its let");
      }
      return it->second;
    }
    case ExprKind::Not:
      require(expr, sub(expr.operands.at(0)), ValueType::Bool, "operand");
      return ValueType::Bool;
    case ExprKind::Neg:
      require(expr, sub(expr.operands.at(0)), ValueType::Int, "operand");
      return ValueType::Int;
    case ExprKind::Or:
    case ExprKind::And:
      require(expr, sub(expr.operands.at(0)), ValueType::Bool, "left operand");
      require(expr, sub(expr.operands.at(1)), ValueType::Bool, "right operand");
      return ValueType::Bool;
    case ExprKind::Eq:
    case ExprKind::Ne: {
      ValueType lhs = sub(expr.operands.at(0));
      require(expr, sub(expr.operands.at(1)), lhs, "right operand");
      return ValueType::Bool;
    }
    default:
      // ordering comparisons and arithmetic
      require(expr, sub(expr.operands.at(0)), ValueType::Int, "left operand");
      require(expr, sub(expr.operands.at(1)), ValueType::Int, "right operand");
      return is_comparison(expr.kind) ? ValueType::Bool : ValueType::Int;
  }
}

std::optional<ValueType> try_type_of(const Expr& expr, const StateDomain& domain, std::size_t milieu_count,
                                     const TypeEnv& env) {
  try {
    return type_of(expr, domain, milieu_count, env);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

bool always_emits(const Block& block) {
  if (block.empty()) return false;
  const Stmt& last = block.back();
  if (last.kind == StmtKind::Emit) return true;
  if (last.kind == StmtKind::If && last.has_else) {
    return always_emits(last.then_block) && always_emits(last.else_block);
  }
  return false;
}

namespace {

class Checker {
 public:
  Checker(const StateDomain& domain, std::size_t milieu_count) : domain_(domain), milieu_count_(milieu_count) {}

  void block(const Block& stmts) {
    const std::size_t scope_mark = env_.size();
    for (const Stmt& s : stmts) statement(s);
    env_.resize(scope_mark);
  }

 private:
  void statement(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Let: {
        if (!Vocabulary::is_generated_identifier(s.name)) {
          throw ValidationError(ValidationFailure::BadIdentifier, "\"" + s.name + "\"");
        }
        if (!bound_.insert(s.name).second) {
          throw ValidationError(ValidationFailure::BadIdentifier, "\"" + s.name + "\" bound twice");
        }
        ValueType t = type_of(s.expr, domain_, milieu_count_, env_);
        env_.emplace_back(s.name, t);
        break;
      }
      case StmtKind::If:
        require(s.expr, type_of(s.expr, domain_, milieu_count_, env_), ValueType::Bool, "if condition");
        block(s.then_block);
        if (s.has_else) block(s.else_block);
        break;
      case StmtKind::Emit: {
        ValueType t = type_of(s.expr, domain_, milieu_count_, env_);
        if (t != value_type_of(domain_)) {
          mismatch(s.expr, "emitted value must be " + std::string(to_string(value_type_of(domain_))) +
                               " for domain " + domain_.describe());
        }
        break;
      }
    }
  }

  const StateDomain& domain_;
  std::size_t milieu_count_;
  TypeEnv env_;
  std::set<std::string> bound_;
};

}  // namespace

RuleProgram validate(Program ast, const StateDomain& domain, std::size_t milieu_count) {
  if (ast.statements.empty()) {
    throw ValidationError(ValidationFailure::NoEmit, "empty program");
  }
  Checker(domain, milieu_count).block(ast.statements);
  if (!always_emits(ast.statements)) {
    throw ValidationError(ValidationFailure::NoEmit, "final statement does not emit on every path");
  }
  const std::size_t nodes = node_count(ast);
  return RuleProgram(std::move(ast), domain, milieu_count, nodes);
}

RuleProgram compile(const RuleSource& source, const StateDomain& domain, std::size_t milieu_count) {
  return validate(parse_source(source), domain, milieu_count);
}

}  // namespace curb::lang
