#pragma once

#include <span>

#include "curb/lang/ast.hpp"
#include "curb/lang/lexer.hpp"

namespace curb::lang {

/// Recursive-descent parser for the rule grammar:
///
///   program := stmt+
///   stmt    := "let" IDENT "=" expr ";" | "if" expr block ("else" block)? | "emit" expr ";"
///   block   := "{" stmt+ "}"
///   expr    := andE ("or" andE)*
///   andE    := cmpE ("and" cmpE)*
///   cmpE    := addE (("=="|"!="|"<"|"<="|">"|">=") addE)?
///   addE    := mulE (("+"|"-") mulE)*
///   mulE    := unary (("*"|"/"|"%") unary)*
///   unary   := "not" unary | "-" unary | primary
///   primary := INT | "true" | "false" | "entityState" | "milieu" "[" expr "]"
///            | "milieuSum" | "milieuCount" | IDENT | "(" expr ")"
///
/// Parentheses leave no trace in the tree. Throws SyntaxError.
Program parse(std::span<const Token> tokens);

/// tokenize followed by parse.
Program parse_source(std::string_view source);
inline Program parse_source(const RuleSource& source) { return parse_source(source.text); }

}  // namespace curb::lang
