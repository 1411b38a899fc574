#include "curb/lang/parser.hpp"

#include <utility>

namespace curb::lang {

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Program program() {
    Program p;
    p.statements.push_back(statement());
    while (!at_end()) p.statements.push_back(statement());
    return p;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }

  bool check(TokenClass cls, std::string_view text) const {
    const Token* t = peek();
    return t != nullptr && t->cls == cls && t->text == text;
  }
  bool check_op(std::string_view text) const { return check(TokenClass::Operator, text); }
  bool check_kw(std::string_view text) const { return check(TokenClass::Keyword, text); }

  [[noreturn]] void fail(std::string expected) const {
    if (at_end()) {
      SourcePosition pos = tokens_.empty() ? SourcePosition{} : tokens_.back().position;
      throw SyntaxError(std::move(expected), "end of input", pos);
    }
    throw SyntaxError(std::move(expected), "\"" + tokens_[pos_].text + "\"", tokens_[pos_].position);
  }

  void expect_op(std::string_view text) {
    if (!check_op(text)) fail("\"" + std::string(text) + "\"");
    ++pos_;
  }

  Stmt statement() {
    if (check_kw("let")) {
      ++pos_;
      const Token* name = peek();
      if (name == nullptr || name->cls != TokenClass::GeneratedIdent) fail("identifier");
      ++pos_;
      expect_op("=");
      Expr value = expression();
      expect_op(";");
      return Stmt::let(name->text, std::move(value));
    }
    if (check_kw("if")) {
      ++pos_;
      Expr cond = expression();
      Block then_block = block();
      if (check_kw("else")) {
        ++pos_;
        Block else_block = block();
        return Stmt::if_else(std::move(cond), std::move(then_block), std::move(else_block));
      }
      return Stmt::if_then(std::move(cond), std::move(then_block));
    }
    if (check_kw("emit")) {
      ++pos_;
      Expr value = expression();
      expect_op(";");
      return Stmt::emit(std::move(value));
    }
    fail("statement");
  }

  Block block() {
    expect_op("{");
    Block b;
    b.push_back(statement());
    while (!check_op("}")) {
      if (at_end()) fail("\"}\"");
      b.push_back(statement());
    }
    ++pos_;
    return b;
  }

  Expr expression() {
    Expr lhs = and_expr();
    while (check_kw("or")) {
      ++pos_;
      lhs = Expr::binary(ExprKind::Or, std::move(lhs), and_expr());
    }
    return lhs;
  }

  Expr and_expr() {
    Expr lhs = cmp_expr();
    while (check_kw("and")) {
      ++pos_;
      lhs = Expr::binary(ExprKind::And, std::move(lhs), cmp_expr());
    }
    return lhs;
  }

  Expr cmp_expr() {
    Expr lhs = add_expr();
    static constexpr std::pair<std::string_view, ExprKind> kOps[] = {
        {"==", ExprKind::Eq}, {"!=", ExprKind::Ne}, {"<", ExprKind::Lt},
        {"<=", ExprKind::Le}, {">", ExprKind::Gt},  {">=", ExprKind::Ge}};
    for (auto [text, kind] : kOps) {
      if (check_op(text)) {
        ++pos_;
        return Expr::binary(kind, std::move(lhs), add_expr());
      }
    }
    return lhs;
  }

  Expr add_expr() {
    Expr lhs = mul_expr();
    while (check_op("+") || check_op("-")) {
      ExprKind kind = peek()->text == "+" ? ExprKind::Add : ExprKind::Sub;
      ++pos_;
      lhs = Expr::binary(kind, std::move(lhs), mul_expr());
    }
    return lhs;
  }

  Expr mul_expr() {
    Expr lhs = unary();
    while (check_op("*") || check_op("/") || check_op("%")) {
      const std::string& t = peek()->text;
      ExprKind kind = t == "*" ? ExprKind::Mul : t == "/" ? ExprKind::Div : ExprKind::Mod;
      ++pos_;
      lhs = Expr::binary(kind, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (check_kw("not")) {
      ++pos_;
      return Expr::unary(ExprKind::Not, unary());
    }
    if (check_op("-")) {
      ++pos_;
      return Expr::unary(ExprKind::Neg, unary());
    }
    return primary();
  }

  Expr primary() {
    const Token* t = peek();
    if (t == nullptr) fail("expression");
    switch (t->cls) {
      case TokenClass::IntLiteral:
        ++pos_;
        return Expr::int_lit(t->int_value);
      case TokenClass::BoolLiteral:
        ++pos_;
        return Expr::bool_lit(t->text == "true");
      case TokenClass::StateRef:
        ++pos_;
        return Expr::entity_state();
      case TokenClass::GeneratedIdent:
        ++pos_;
        return Expr::ident(t->text);
      case TokenClass::MilieuRef:
        ++pos_;
        if (t->text == "milieuSum") return Expr::milieu_sum();
        if (t->text == "milieuCount") return Expr::milieu_count();
        {
          expect_op("[");
          Expr index = expression();
          expect_op("]");
          return Expr::milieu_at(std::move(index));
        }
      case TokenClass::Operator:
        if (t->text == "(") {
          ++pos_;
          Expr inner = expression();
          expect_op(")");
          return inner;
        }
        break;
      case TokenClass::Keyword:
        break;
    }
    fail("expression");
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::span<const Token> tokens) { return Parser(tokens).program(); }

Program parse_source(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  return parse(tokens);
}

}  // namespace curb::lang
