#pragma once

#include <cstddef>

#include "curb/bridge/bindings.hpp"
#include "curb/bridge/capture.hpp"
#include "curb/lang/ast.hpp"

namespace curb::bridge::detail {

// Runs a program until its first emit, writing the emitted value's text to
// `channel`. `bindings` may be null for closed programs; any reference to
// entity or milieu state is then a usage error. Each visited node costs one
// unit of `fuel`.
void evaluate(const lang::Program& program, const BindingSet* bindings, std::size_t fuel,
              CaptureChannel& channel);

}  // namespace curb::bridge::detail
