#include <gtest/gtest.h>

#include "curb/lang/lexer.hpp"
#include "support/fixtures.hpp"

namespace curb::lang {
namespace {

using testing::error_code_of;

std::vector<TokenClass> classes(const std::vector<Token>& tokens) {
  std::vector<TokenClass> out;
  for (const auto& t : tokens) out.push_back(t.cls);
  return out;
}

TEST(Lexer, EmitEntityState) {
  const auto tokens = tokenize("emit entityState ;");
  EXPECT_EQ(classes(tokens),
            (std::vector<TokenClass>{TokenClass::Keyword, TokenClass::StateRef, TokenClass::Operator}));
  EXPECT_EQ(tokens[0].text, "emit");
  EXPECT_EQ(tokens[2].text, ";");
}

TEST(Lexer, LetWithGeneratedIdentifier) {
  const auto tokens = tokenize("let identifier0 = milieuSum + 1 ;");
  EXPECT_EQ(classes(tokens), (std::vector<TokenClass>{TokenClass::Keyword, TokenClass::GeneratedIdent,
                                                      TokenClass::Operator, TokenClass::MilieuRef,
                                                      TokenClass::Operator, TokenClass::IntLiteral,
                                                      TokenClass::Operator}));
  EXPECT_EQ(tokens[1].text, "identifier0");
  EXPECT_EQ(tokens[3].text, "milieuSum");
  EXPECT_EQ(tokens[5].int_value, 1);
}

TEST(Lexer, UnknownWordIsVocabularyViolation) {
  try {
    tokenize("emit launchMissiles ;");
    FAIL() << "expected VocabularyViolation";
  } catch (const VocabularyViolation& e) {
    EXPECT_EQ(e.word(), "launchMissiles");
    EXPECT_EQ(e.position(), (SourcePosition{1, 6}));
  }
}

TEST(Lexer, WhitespaceIsInsignificant) {
  const auto a = tokenize("if entityState==1{emit 0;}emit 1;");
  const auto b = tokenize("if  entityState ==\n 1 {\n\temit 0 ;\n}\nemit 1 ;");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_lexeme(b[i]));
}

TEST(Lexer, LongestOperatorMatch) {
  const auto tokens = tokenize("<= >= == != < > =");
  std::vector<std::string> texts;
  for (const auto& t : tokens) texts.push_back(t.text);
  EXPECT_EQ(texts, (std::vector<std::string>{"<=", ">=", "==", "!=", "<", ">", "="}));
}

TEST(Lexer, KeywordsAndLiterals) {
  const auto tokens = tokenize("true false milieu milieuCount not and or");
  EXPECT_EQ(classes(tokens), (std::vector<TokenClass>{TokenClass::BoolLiteral, TokenClass::BoolLiteral,
                                                      TokenClass::MilieuRef, TokenClass::MilieuRef,
                                                      TokenClass::Keyword, TokenClass::Keyword,
                                                      TokenClass::Keyword}));
}

TEST(Lexer, IdentifierFamilyIsExact) {
  EXPECT_TRUE(Vocabulary::is_generated_identifier("identifier12"));
  EXPECT_FALSE(Vocabulary::is_generated_identifier("identifier"));
  EXPECT_FALSE(Vocabulary::is_generated_identifier("identifierX"));
  EXPECT_FALSE(Vocabulary::is_generated_identifier("Identifier1"));
  EXPECT_EQ(error_code_of([] { tokenize("emit identifier ;"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit identifier1x ;"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit myVar ;"); }), ErrorCode::VocabularyViolation);
}

TEST(Lexer, MalformedLiterals) {
  EXPECT_EQ(error_code_of([] { tokenize("emit 12abc ;"); }), ErrorCode::LexError);
  EXPECT_EQ(error_code_of([] { tokenize("emit 99999999999999999999 ;"); }), ErrorCode::LexError);
}

TEST(Lexer, ForeignCharacters) {
  EXPECT_EQ(error_code_of([] { tokenize("emit 1 ; # comment"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit \"x\" ;"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit 1 && 0 ;"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit caf\xc3\xa9 ;"); }), ErrorCode::VocabularyViolation);
  EXPECT_EQ(error_code_of([] { tokenize("emit entityState . x ;"); }), ErrorCode::VocabularyViolation);
}

TEST(Lexer, PositionsTrackLines) {
  const auto tokens = tokenize("emit 0 ;\n  emit 1 ;");
  EXPECT_EQ(tokens[3].position, (SourcePosition{2, 3}));
}

TEST(Lexer, JoinedTokensRelexIdentically) {
  const auto tokens = tokenize(testing::rule110_source());
  const auto again = tokenize(join_tokens(tokens));
  ASSERT_EQ(tokens.size(), again.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) EXPECT_TRUE(tokens[i].same_lexeme(again[i]));
}

TEST(Lexer, EmptyInputYieldsNoTokens) { EXPECT_TRUE(tokenize("  \n\t ").empty()); }

}  // namespace
}  // namespace curb::lang
