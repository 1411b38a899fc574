#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curb/state.hpp"

namespace curb::bridge {

/// Receives what a rule emits, in text form, the way a redirected output
/// stream would. Each execution owns a fresh channel.
class CaptureChannel {
 public:
  void write(std::string raw) { buffer_.push_back(std::move(raw)); }

  const std::vector<std::string>& buffer() const noexcept { return buffer_; }
  std::size_t size() const noexcept { return buffer_.size(); }

  /// The one captured value. Throws NoEmitExecuted when nothing was captured.
  const std::string& single() const;

 private:
  std::vector<std::string> buffer_;
};

/// Data back to code: reads `true`/`false` (boolean domains) or a decimal
/// integer with optional leading minus (integer domains) and checks domain
/// membership. Throws UnparsableCapture or EmittedValueOutOfDomain.
StateValue capture_parse(std::string_view raw, const StateDomain& domain);

}  // namespace curb::bridge
