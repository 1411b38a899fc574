#include <gtest/gtest.h>

#include "curb/lang/parser.hpp"
#include "support/fixtures.hpp"

namespace curb::lang {
namespace {

TEST(Parser, SingleEmit) {
  EXPECT_EQ(parse_source("emit 0 ;"), (Program{{Stmt::emit(Expr::int_lit(0))}}));
}

TEST(Parser, IfThenEmit) {
  const Program expected{{
      Stmt::if_then(Expr::binary(ExprKind::Eq, Expr::entity_state(), Expr::int_lit(1)), {Stmt::emit(Expr::int_lit(0))}),
      Stmt::emit(Expr::int_lit(1)),
  }};
  EXPECT_EQ(parse_source("if entityState == 1 { emit 0 ; } emit 1 ;"), expected);
}

TEST(Parser, EmitWithoutExpression) {
  try {
    parse_source("emit ;");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.expected(), "expression");
    EXPECT_EQ(e.found(), "\";\"");
  }
}

TEST(Parser, Precedence) {
  // or < and < comparison < additive < multiplicative < unary
  const Program p = parse_source("emit 1 + 2 * - 3 < 4 and true or false ;");
  const Expr& e = p.statements[0].expr;
  ASSERT_EQ(e.kind, ExprKind::Or);
  ASSERT_EQ(e.operands[0].kind, ExprKind::And);
  const Expr& cmp = e.operands[0].operands[0];
  ASSERT_EQ(cmp.kind, ExprKind::Lt);
  ASSERT_EQ(cmp.operands[0].kind, ExprKind::Add);
  const Expr& mul = cmp.operands[0].operands[1];
  ASSERT_EQ(mul.kind, ExprKind::Mul);
  EXPECT_EQ(mul.operands[1], Expr::unary(ExprKind::Neg, Expr::int_lit(3)));
}

TEST(Parser, LeftAssociative) {
  const Program p = parse_source("emit 8 - 4 - 2 ;");
  EXPECT_EQ(p.statements[0].expr,
            Expr::binary(ExprKind::Sub, Expr::binary(ExprKind::Sub, Expr::int_lit(8), Expr::int_lit(4)),
                         Expr::int_lit(2)));
}

TEST(Parser, ParenthesesOverridePrecedence) {
  const Program p = parse_source("emit ( 1 + 2 ) * 3 ;");
  EXPECT_EQ(p.statements[0].expr.kind, ExprKind::Mul);
}

TEST(Parser, ComparisonsDoNotChain) {
  EXPECT_THROW(parse_source("emit 1 < 2 < 3 ;"), SyntaxError);
}

TEST(Parser, MilieuIndexing) {
  const Program p = parse_source("emit milieu [ 1 + identifier0 ] ;");
  const Expr& e = p.statements[0].expr;
  ASSERT_EQ(e.kind, ExprKind::MilieuAt);
  EXPECT_EQ(e.operands[0].kind, ExprKind::Add);
}

TEST(Parser, IfElse) {
  const Program p = parse_source("if true { emit 1 ; } else { emit 0 ; }");
  ASSERT_EQ(p.statements.size(), 1u);
  EXPECT_TRUE(p.statements[0].has_else);
  EXPECT_EQ(p.statements[0].else_block.size(), 1u);
}

TEST(Parser, StructuralErrors) {
  EXPECT_THROW(parse_source(""), SyntaxError);
  EXPECT_THROW(parse_source("emit 1"), SyntaxError);
  EXPECT_THROW(parse_source("if true { } emit 1 ;"), SyntaxError);
  EXPECT_THROW(parse_source("if true emit 1 ;"), SyntaxError);
  EXPECT_THROW(parse_source("let 3 = 1 ; emit 1 ;"), SyntaxError);
  EXPECT_THROW(parse_source("emit 1 ; }"), SyntaxError);
  EXPECT_THROW(parse_source("emit milieu 0 ;"), SyntaxError);
  EXPECT_THROW(parse_source("else { emit 1 ; }"), SyntaxError);
  EXPECT_THROW(parse_source("emit ( 1 ;"), SyntaxError);
}

TEST(Parser, Rule110Shape) {
  const Program p = parse_source(testing::rule110_source());
  ASSERT_EQ(p.statements.size(), 3u);
  EXPECT_EQ(p.statements[0].kind, StmtKind::Let);
  EXPECT_EQ(p.statements[0].name, "identifier0");
  EXPECT_EQ(p.statements[1].kind, StmtKind::If);
  EXPECT_EQ(p.statements[2].kind, StmtKind::Emit);
}

}  // namespace
}  // namespace curb::lang
