#include "curb/bridge/execute.hpp"

#include <algorithm>

#include "curb/error.hpp"
#include "curb/lang/parser.hpp"
#include "evaluator.hpp"

namespace curb::bridge {

std::string_view to_string(ExecutionMode mode) { return mode == ExecutionMode::Faithful ? "faithful" : "bound"; }

CaptureChannel capture_closed(const lang::RuleSource& closed, const StateDomain& domain) {
  const std::vector<lang::Token> tokens = lang::tokenize(closed);
  auto open = std::find_if(tokens.begin(), tokens.end(), [](const lang::Token& t) {
    return t.cls == lang::TokenClass::StateRef || t.cls == lang::TokenClass::MilieuRef;
  });
  if (open != tokens.end()) {
    throw Error(ErrorCode::Usage, "source is not closed: \"" + open->text + "\" at " + to_string(open->position));
  }
  // No milieu references remain, so there is no milieu size to check against.
  const lang::RuleProgram program = lang::validate(lang::parse(tokens), domain, 0);
  CaptureChannel channel;
  detail::evaluate(program.ast(), nullptr, fuel_for(program.node_count()), channel);
  return channel;
}

CaptureChannel capture_bound(const lang::RuleProgram& program, const BindingSet& bindings) {
  CaptureChannel channel;
  detail::evaluate(program.ast(), &bindings, fuel_for(program.node_count()), channel);
  return channel;
}

StateValue execute_closed(const lang::RuleSource& closed, const StateDomain& domain) {
  return capture_parse(capture_closed(closed, domain).single(), domain);
}

StateValue execute_bound(const lang::RuleProgram& program, const BindingSet& bindings) {
  return capture_parse(capture_bound(program, bindings).single(), program.domain());
}

StateValue execute(ExecutionMode mode, const lang::RuleSource& source, const lang::RuleProgram& program,
                   const BindingSet& bindings) {
  if (mode == ExecutionMode::Faithful) return execute_closed(interpolate(source, bindings), program.domain());
  return execute_bound(program, bindings);
}

}  // namespace curb::bridge
