#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curb/error.hpp"

namespace curb::lang {

/// Update rules held as data: plain text, no validity implied.
struct RuleSource {
  std::string text;

  friend bool operator==(const RuleSource&, const RuleSource&) = default;
};

enum class TokenClass { Keyword, Operator, IntLiteral, BoolLiteral, StateRef, MilieuRef, GeneratedIdent };

std::string_view to_string(TokenClass cls);

struct Token {
  TokenClass cls;
  std::string text;
  SourcePosition position;
  std::int64_t int_value = 0;  // IntLiteral only

  /// Class and text agree; positions are ignored.
  bool same_lexeme(const Token& other) const { return cls == other.cls && text == other.text; }
};

/// The closed set of words and operators rule code is built from, plus the
/// two open families: non-negative integer literals and `identifier<digits>`.
class Vocabulary {
 public:
  static const Vocabulary& standard();

  std::span<const std::string_view> words() const { return words_; }
  std::span<const std::string_view> operators() const { return operators_; }

  bool is_word(std::string_view text) const;
  bool is_operator(std::string_view text) const;

  /// Class of a vocabulary word or generated identifier; nullopt for anything else.
  std::optional<TokenClass> classify_word(std::string_view text) const;

  static constexpr std::string_view kIdentifierStem = "identifier";
  static bool is_generated_identifier(std::string_view text);

 private:
  Vocabulary() = default;

  std::array<std::string_view, 13> words_{"let",   "if",    "else",        "emit",   "or",
                                          "and",   "not",   "true",        "false",  "entityState",
                                          "milieu", "milieuSum", "milieuCount"};
  std::array<std::string_view, 19> operators_{"==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "/",
                                              "%",  "=",  ";",  "(",  ")", "[", "]", "{", "}"};
};

/// Splits rule text into tokens. Throws VocabularyViolation for any word or
/// character outside the vocabulary families and LexError for malformed
/// integer literals.
std::vector<Token> tokenize(std::string_view source);
inline std::vector<Token> tokenize(const RuleSource& source) { return tokenize(source.text); }

/// Tokens joined by single spaces.
std::string join_tokens(const std::vector<Token>& tokens);

}  // namespace curb::lang
