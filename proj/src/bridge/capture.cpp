#include "curb/bridge/capture.hpp"

#include <charconv>

#include "curb/error.hpp"

namespace curb::bridge {

const std::string& CaptureChannel::single() const {
  if (buffer_.empty()) throw Error(ErrorCode::NoEmitExecuted, "rule finished without emitting a value");
  if (buffer_.size() > 1) throw Error(ErrorCode::Usage, "capture channel holds more than one value");
  return buffer_.front();
}

StateValue capture_parse(std::string_view raw, const StateDomain& domain) {
  if (domain.kind() == DomainKind::Boolean) {
    if (raw == "true") return StateValue::boolean(true);
    if (raw == "false") return StateValue::boolean(false);
    throw Error(ErrorCode::UnparsableCapture, "\"" + std::string(raw) + "\" is not a boolean");
  }

  std::string_view digits = raw;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  const bool well_formed = !digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos;
  std::int64_t value = 0;
  if (well_formed) {
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || ptr != raw.data() + raw.size()) {
      throw Error(ErrorCode::UnparsableCapture, "\"" + std::string(raw) + "\" is out of integer range");
    }
  } else {
    throw Error(ErrorCode::UnparsableCapture, "\"" + std::string(raw) + "\" is not a decimal integer");
  }

  StateValue state = StateValue::integer(value);
  if (!domain.contains(state)) {
    throw Error(ErrorCode::EmittedValueOutOfDomain, std::string(raw) + " is outside " + domain.describe());
  }
  return state;
}

}  // namespace curb::bridge
