#include "curb/lang/ast.hpp"

#include <utility>

namespace curb::lang {

bool is_unary(ExprKind kind) { return kind == ExprKind::Not || kind == ExprKind::Neg; }

bool is_binary(ExprKind kind) { return kind >= ExprKind::Or; }

bool is_comparison(ExprKind kind) { return kind >= ExprKind::Eq && kind <= ExprKind::Ge; }

bool is_arithmetic(ExprKind kind) { return kind >= ExprKind::Add; }

bool is_reference(ExprKind kind) {
  switch (kind) {
    case ExprKind::EntityState:
    case ExprKind::MilieuAt:
    case ExprKind::MilieuSum:
    case ExprKind::MilieuCount:
    case ExprKind::Ident:
      return true;
    default:
      return false;
  }
}

int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
      return 3;
    case ExprKind::Add:
    case ExprKind::Sub:
      return 4;
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Mod:
      return 5;
    case ExprKind::Not:
    case ExprKind::Neg:
      return 6;
    default:
      return 7;
  }
}

std::string_view spelling(ExprKind kind) {
  switch (kind) {
    case ExprKind::IntLit: return "<int>";
    case ExprKind::BoolLit: return "<bool>";
    case ExprKind::EntityState: return "entityState";
    case ExprKind::MilieuAt: return "milieu";
    case ExprKind::MilieuSum: return "milieuSum";
    case ExprKind::MilieuCount: return "milieuCount";
    case ExprKind::Ident: return "<ident>";
    case ExprKind::Not: return "not";
    case ExprKind::Neg: return "-";
    case ExprKind::Or: return "or";
    case ExprKind::And: return "and";
    case ExprKind::Eq: return "==";
    case ExprKind::Ne: return "!=";
    case ExprKind::Lt: return "<";
    case ExprKind::Le: return "<=";
    case ExprKind::Gt: return ">";
    case ExprKind::Ge: return ">=";
    case ExprKind::Add: return "+";
    case ExprKind::Sub: return "-";
    case ExprKind::Mul: return "*";
    case ExprKind::Div: return "/";
    case ExprKind::Mod: return "%";
  }
  return "?";
}

Expr Expr::int_lit(std::int64_t v) {
  Expr e;
  e.kind = ExprKind::IntLit;
  e.value = v;
  return e;
}

Expr Expr::bool_lit(bool v) {
  Expr e;
  e.kind = ExprKind::BoolLit;
  e.value = v ? 1 : 0;
  return e;
}

Expr Expr::entity_state() {
  Expr e;
  e.kind = ExprKind::EntityState;
  return e;
}

Expr Expr::milieu_at(Expr index) {
  Expr e;
  e.kind = ExprKind::MilieuAt;
  e.operands.push_back(std::move(index));
  return e;
}

Expr Expr::milieu_sum() {
  Expr e;
  e.kind = ExprKind::MilieuSum;
  return e;
}

Expr Expr::milieu_count() {
  Expr e;
  e.kind = ExprKind::MilieuCount;
  return e;
}

Expr Expr::ident(std::string name) {
  Expr e;
  e.kind = ExprKind::Ident;
  e.name = std::move(name);
  return e;
}

Expr Expr::unary(ExprKind op, Expr operand) {
  Expr e;
  e.kind = op;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(ExprKind op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::literal(const StateValue& v) {
  if (v.is_boolean()) return bool_lit(v.as_bool());
  if (v.as_integer() < 0) return unary(ExprKind::Neg, int_lit(-v.as_integer()));
  return int_lit(v.as_integer());
}

Stmt Stmt::let(std::string name, Expr value) {
  Stmt s;
  s.kind = StmtKind::Let;
  s.name = std::move(name);
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::emit(Expr value) {
  Stmt s;
  s.kind = StmtKind::Emit;
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::if_then(Expr cond, std::vector<Stmt> then_block) {
  Stmt s;
  s.kind = StmtKind::If;
  s.expr = std::move(cond);
  s.then_block = std::move(then_block);
  return s;
}

Stmt Stmt::if_else(Expr cond, std::vector<Stmt> then_block, std::vector<Stmt> else_block) {
  Stmt s = if_then(std::move(cond), std::move(then_block));
  s.has_else = true;
  s.else_block = std::move(else_block);
  return s;
}

std::size_t node_count(const Expr& expr) {
  std::size_t n = 1;
  for (const Expr& op : expr.operands) n += node_count(op);
  return n;
}

std::size_t node_count(const Block& block) {
  std::size_t n = 0;
  for (const Stmt& s : block) {
    n += 1 + node_count(s.expr);
    if (s.kind == StmtKind::If) {
      n += node_count(s.then_block);
      if (s.has_else) n += node_count(s.else_block);
    }
  }
  return n;
}

}  // namespace curb::lang
