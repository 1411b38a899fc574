#include "curb/state.hpp"

#include "curb/error.hpp"

namespace curb {

std::string_view to_string(DomainKind kind) {
  return kind == DomainKind::Boolean ? "bool" : "int";
}

std::string StateValue::text() const {
  if (is_boolean()) return as_bool() ? "true" : "false";
  return std::to_string(value_);
}

StateDomain StateDomain::integer_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(ErrorCode::DomainMismatch,
                "empty integer range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (lo < -kMaxMagnitude || hi > kMaxMagnitude) {
    throw Error(ErrorCode::DomainMismatch, "integer range bounds exceed +/-" + std::to_string(kMaxMagnitude));
  }
  return StateDomain(DomainKind::IntegerRange, lo, hi);
}

bool StateDomain::contains(const StateValue& value) const noexcept {
  if (value.kind() != kind_) return false;
  return value.numeric() >= lo_ && value.numeric() <= hi_;
}

StateValue StateDomain::value_at(std::uint64_t index) const {
  if (index >= size()) throw Error(ErrorCode::Usage, "domain index out of range");
  if (kind_ == DomainKind::Boolean) return StateValue::boolean(index != 0);
  return StateValue::integer(lo_ + static_cast<std::int64_t>(index));
}

std::vector<StateValue> StateDomain::values() const {
  std::vector<StateValue> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(value_at(i));
  return out;
}

std::string StateDomain::describe() const {
  if (kind_ == DomainKind::Boolean) return "bool";
  return "int " + std::to_string(lo_) + " " + std::to_string(hi_);
}

}  // namespace curb
