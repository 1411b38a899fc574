#pragma once

#include "curb/bridge/bindings.hpp"
#include "curb/bridge/capture.hpp"
#include "curb/lang/lexer.hpp"
#include "curb/lang/validator.hpp"
#include "curb/state.hpp"

namespace curb::bridge {

/// Code to data: substitutes the running program's values into rule text.
/// Works on tokens, never raw substrings: `entityState`, `milieu [ k ]` with a
/// literal k, `milieuSum` and `milieuCount` each become a literal. The result
/// is re-spelled with single spaces between tokens and has no free
/// references. Throws NonConstantMilieuIndex when an index is not a literal.
lang::RuleSource interpolate(const lang::RuleSource& source, const BindingSet& bindings);

/// How an update is carried out. Faithful re-interpolates, re-parses and
/// re-validates the rule text on every call; Bound walks the validated tree
/// against the bindings. Both report results through a CaptureChannel.
enum class ExecutionMode { Faithful, Bound };

std::string_view to_string(ExecutionMode mode);

/// Front end + evaluation of a closed source; returns the raw capture.
CaptureChannel capture_closed(const lang::RuleSource& closed, const StateDomain& domain);

/// Evaluation of a validated program against bindings; returns the raw capture.
CaptureChannel capture_bound(const lang::RuleProgram& program, const BindingSet& bindings);

/// Data as code for a closed source. The first emit ends execution.
StateValue execute_closed(const lang::RuleSource& closed, const StateDomain& domain);

/// Same result contract as execute_closed, without going through text.
StateValue execute_bound(const lang::RuleProgram& program, const BindingSet& bindings);

/// One update in the given mode. `source` is the text `program` was compiled from.
StateValue execute(ExecutionMode mode, const lang::RuleSource& source, const lang::RuleProgram& program,
                   const BindingSet& bindings);

/// Budget of node visits granted to a program of `nodes` nodes.
constexpr std::size_t fuel_for(std::size_t nodes) { return 10 * nodes; }

}  // namespace curb::bridge
