#pragma once

#include <string>

#include "curb/lang/ast.hpp"
#include "curb/lang/lexer.hpp"

namespace curb::lang {

// Canonical text: single spaces between tokens, one statement per line,
// block contents indented by two spaces. Parentheses appear only where the
// tree shape needs them, so parse(tokenize(render(p))) == p.
std::string render(const Program& program);
std::string render(const Stmt& stmt);
std::string render(const Expr& expr);

inline RuleSource render_source(const Program& program) { return RuleSource{render(program)}; }

}  // namespace curb::lang
