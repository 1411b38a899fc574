#include "curb/bridge/execute.hpp"

#include "curb/error.hpp"

namespace curb::bridge {

using lang::Token;
using lang::TokenClass;

namespace {

void append_literal(std::vector<Token>& out, const StateValue& value, const curb::SourcePosition& at) {
  if (value.is_boolean()) {
    out.push_back(Token{TokenClass::BoolLiteral, value.as_bool() ? "true" : "false", at});
    return;
  }
  const std::int64_t v = value.as_integer();
  if (v < 0) out.push_back(Token{TokenClass::Operator, "-", at});
  const std::int64_t magnitude = v < 0 ? -v : v;
  out.push_back(Token{TokenClass::IntLiteral, std::to_string(magnitude), at, magnitude});
}

bool is_op(const std::vector<Token>& tokens, std::size_t i, std::string_view text) {
  return i < tokens.size() && tokens[i].cls == TokenClass::Operator && tokens[i].text == text;
}

}  // namespace

lang::RuleSource interpolate(const lang::RuleSource& source, const BindingSet& bindings) {
  const std::vector<Token> tokens = lang::tokenize(source);
  std::vector<Token> out;
  out.reserve(tokens.size());

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.cls == TokenClass::StateRef) {
      append_literal(out, bindings.entity_state(), t.position);
    } else if (t.cls == TokenClass::MilieuRef && t.text == "milieuSum") {
      append_literal(out, StateValue::integer(bindings.milieu_sum()), t.position);
    } else if (t.cls == TokenClass::MilieuRef && t.text == "milieuCount") {
      append_literal(out, StateValue::integer(bindings.milieu_count()), t.position);
    } else if (t.cls == TokenClass::MilieuRef) {
      const bool literal_index = is_op(tokens, i + 1, "[") && i + 2 < tokens.size() &&
                                 tokens[i + 2].cls == TokenClass::IntLiteral && is_op(tokens, i + 3, "]");
      if (!literal_index) {
        throw Error(ErrorCode::NonConstantMilieuIndex,
                    "milieu index at " + curb::to_string(t.position) + " is not an integer literal");
      }
      const std::int64_t k = tokens[i + 2].int_value;
      if (k >= bindings.milieu_count()) {
        throw RuleRuntimeError(RuntimeFault::MilieuIndexOutOfRange,
                               "milieu [ " + std::to_string(k) + " ] with milieu size " +
                                   std::to_string(bindings.milieu_count()));
      }
      append_literal(out, bindings.milieu_states()[static_cast<std::size_t>(k)], t.position);
      i += 3;
    } else {
      out.push_back(t);
    }
  }
  return lang::RuleSource{lang::join_tokens(out)};
}

}  // namespace curb::bridge
