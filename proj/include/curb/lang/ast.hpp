#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curb/state.hpp"

namespace curb::lang {

enum class ExprKind : std::uint8_t {
  // atoms
  IntLit,
  BoolLit,
  EntityState,
  MilieuAt,  // operands[0] is the index expression
  MilieuSum,
  MilieuCount,
  Ident,
  // unary
  Not,
  Neg,
  // binary
  Or,
  And,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
};

bool is_unary(ExprKind kind);
bool is_binary(ExprKind kind);
bool is_comparison(ExprKind kind);
bool is_arithmetic(ExprKind kind);
bool is_reference(ExprKind kind);

/// Binding strength: or=1, and=2, comparison=3, additive=4, multiplicative=5,
/// unary=6, atoms=7.
int precedence(ExprKind kind);

/// Source spelling of an operator or atom keyword.
std::string_view spelling(ExprKind kind);

struct Expr {
  ExprKind kind = ExprKind::IntLit;
  std::int64_t value = 0;  // IntLit (always >= 0), BoolLit (0/1)
  std::string name;        // Ident
  std::vector<Expr> operands;

  static Expr int_lit(std::int64_t v);
  static Expr bool_lit(bool v);
  static Expr entity_state();
  static Expr milieu_at(Expr index);
  static Expr milieu_sum();
  static Expr milieu_count();
  static Expr ident(std::string name);
  static Expr unary(ExprKind op, Expr operand);
  static Expr binary(ExprKind op, Expr lhs, Expr rhs);

  /// Literal expression for a state value; negative integers become Neg(IntLit).
  static Expr literal(const StateValue& v);

  friend bool operator==(const Expr&, const Expr&) = default;
};

enum class StmtKind : std::uint8_t { Let, If, Emit };

struct Stmt {
  StmtKind kind = StmtKind::Emit;
  std::string name;  // Let
  Expr expr;         // Let value, If condition, Emit value
  std::vector<Stmt> then_block;
  bool has_else = false;
  std::vector<Stmt> else_block;

  static Stmt let(std::string name, Expr value);
  static Stmt emit(Expr value);
  static Stmt if_then(Expr cond, std::vector<Stmt> then_block);
  static Stmt if_else(Expr cond, std::vector<Stmt> then_block, std::vector<Stmt> else_block);

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

using Block = std::vector<Stmt>;

/// Syntax tree of a rule source.
struct Program {
  Block statements;

  friend bool operator==(const Program&, const Program&) = default;
};

std::size_t node_count(const Expr& expr);
std::size_t node_count(const Block& block);
inline std::size_t node_count(const Program& program) { return node_count(program.statements); }

}  // namespace curb::lang
