#include "curb/lang/render.hpp"

namespace curb::lang {

namespace {

void expr_to(std::string& out, const Expr& e);

void operand_to(std::string& out, const Expr& operand, bool parenthesize) {
  if (parenthesize) {
    out += "( ";
    expr_to(out, operand);
    out += " )";
  } else {
    expr_to(out, operand);
  }
}

void expr_to(std::string& out, const Expr& e) {
  switch (e.kind) {
    case ExprKind::IntLit:
      out += std::to_string(e.value);
      return;
    case ExprKind::BoolLit:
      out += e.value != 0 ? "true" : "false";
      return;
    case ExprKind::Ident:
      out += e.name;
      return;
    case ExprKind::EntityState:
    case ExprKind::MilieuSum:
    case ExprKind::MilieuCount:
      out += spelling(e.kind);
      return;
    case ExprKind::MilieuAt:
      out += "milieu [ ";
      expr_to(out, e.operands[0]);
      out += " ]";
      return;
    case ExprKind::Not:
    case ExprKind::Neg:
      out += spelling(e.kind);
      out += ' ';
      operand_to(out, e.operands[0], precedence(e.operands[0].kind) < precedence(e.kind));
      return;
    default: {
      const int p = precedence(e.kind);
      const int lp = precedence(e.operands[0].kind);
      const int rp = precedence(e.operands[1].kind);
      // Binary chains are left-associative; comparisons do not chain at all.
      operand_to(out, e.operands[0], lp < p || (p == 3 && lp == 3));
      out += ' ';
      out += spelling(e.kind);
      out += ' ';
      operand_to(out, e.operands[1], rp <= p);
      return;
    }
  }
}

void block_to(std::string& out, const Block& block, int depth);

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void stmt_to(std::string& out, const Stmt& s, int depth) {
  indent(out, depth);
  switch (s.kind) {
    case StmtKind::Let:
      out += "let " + s.name + " = ";
      expr_to(out, s.expr);
      out += " ;";
      return;
    case StmtKind::Emit:
      out += "emit ";
      expr_to(out, s.expr);
      out += " ;";
      return;
    case StmtKind::If:
      out += "if ";
      expr_to(out, s.expr);
      out += " {\n";
      block_to(out, s.then_block, depth + 1);
      indent(out, depth);
      out += '}';
      if (s.has_else) {
        out += " else {\n";
        block_to(out, s.else_block, depth + 1);
        indent(out, depth);
        out += '}';
      }
      return;
  }
}

void block_to(std::string& out, const Block& block, int depth) {
  for (const Stmt& s : block) {
    stmt_to(out, s, depth);
    out += '\n';
  }
}

}  // namespace

std::string render(const Expr& expr) {
  std::string out;
  expr_to(out, expr);
  return out;
}

std::string render(const Stmt& stmt) {
  std::string out;
  stmt_to(out, stmt, 0);
  return out;
}

std::string render(const Program& program) {
  std::string out;
  block_to(out, program.statements, 0);
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace curb::lang
