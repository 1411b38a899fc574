#include "curb/lang/lexer.hpp"

#include <algorithm>
#include <charconv>

namespace curb::lang {

std::string_view to_string(TokenClass cls) {
  switch (cls) {
    case TokenClass::Keyword: return "Keyword";
    case TokenClass::Operator: return "Operator";
    case TokenClass::IntLiteral: return "IntLiteral";
    case TokenClass::BoolLiteral: return "BoolLiteral";
    case TokenClass::StateRef: return "StateRef";
    case TokenClass::MilieuRef: return "MilieuRef";
    case TokenClass::GeneratedIdent: return "GeneratedIdent";
  }
  return "?";
}

const Vocabulary& Vocabulary::standard() {
  static const Vocabulary vocabulary;
  return vocabulary;
}

bool Vocabulary::is_word(std::string_view text) const {
  return std::find(words_.begin(), words_.end(), text) != words_.end();
}

bool Vocabulary::is_operator(std::string_view text) const {
  return std::find(operators_.begin(), operators_.end(), text) != operators_.end();
}

bool Vocabulary::is_generated_identifier(std::string_view text) {
  if (text.size() <= kIdentifierStem.size() || text.substr(0, kIdentifierStem.size()) != kIdentifierStem) {
    return false;
  }
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(kIdentifierStem.size()), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<TokenClass> Vocabulary::classify_word(std::string_view text) const {
  if (text == "true" || text == "false") return TokenClass::BoolLiteral;
  if (text == "entityState") return TokenClass::StateRef;
  if (text == "milieu" || text == "milieuSum" || text == "milieuCount") return TokenClass::MilieuRef;
  if (is_word(text)) return TokenClass::Keyword;
  if (is_generated_identifier(text)) return TokenClass::GeneratedIdent;
  return std::nullopt;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || is_digit(c) || c == '_';
}
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      if (at_end()) break;
      tokens.push_back(next());
    }
    return tokens;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) advance();
  }

  SourcePosition here() const { return {line_, column_}; }

  std::string_view take_while(bool (*pred)(char)) {
    std::size_t start = pos_;
    while (!at_end() && pred(peek())) advance();
    return src_.substr(start, pos_ - start);
  }

  Token next() {
    const SourcePosition start = here();
    const char c = peek();

    if (is_digit(c)) {
      std::string_view digits = take_while(is_digit);
      if (!at_end() && is_word_char(peek())) {
        std::string_view tail = take_while(is_word_char);
        throw LexError("malformed integer literal \"" + std::string(digits) + std::string(tail) + "\"", start);
      }
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw LexError("integer literal \"" + std::string(digits) + "\" out of range", start);
      }
      return Token{TokenClass::IntLiteral, std::string(digits), start, value};
    }

    if (is_word_char(c)) {
      std::string_view word = take_while(is_word_char);
      auto cls = Vocabulary::standard().classify_word(word);
      if (!cls) throw VocabularyViolation(std::string(word), start);
      return Token{*cls, std::string(word), start};
    }

    const std::string two{c, peek(1)};
    if (Vocabulary::standard().is_operator(two)) {
      advance(2);
      return Token{TokenClass::Operator, two, start};
    }
    const std::string one{c};
    if (Vocabulary::standard().is_operator(one)) {
      advance();
      return Token{TokenClass::Operator, one, start};
    }

    // Anything else: report the whole UTF-8 sequence rather than a lone byte.
    std::size_t len = 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    std::string bad(src_.substr(pos_, std::min(len, src_.size() - pos_)));
    throw VocabularyViolation(bad, start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string join_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace curb::lang
