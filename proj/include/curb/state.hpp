#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curb {

enum class DomainKind { Boolean, IntegerRange };

std::string_view to_string(DomainKind kind);

/// A single entity state: a boolean or an integer. Booleans are stored as 0/1
/// so that sums over a milieu need no special casing.
class StateValue {
 public:
  static StateValue boolean(bool value) { return StateValue(DomainKind::Boolean, value ? 1 : 0); }
  static StateValue integer(std::int64_t value) { return StateValue(DomainKind::IntegerRange, value); }

  DomainKind kind() const noexcept { return kind_; }
  bool is_boolean() const noexcept { return kind_ == DomainKind::Boolean; }
  bool as_bool() const noexcept { return value_ != 0; }
  std::int64_t as_integer() const noexcept { return value_; }

  /// 0/1 for booleans, the value itself otherwise.
  std::int64_t numeric() const noexcept { return value_; }

  /// Literal form: `true`/`false` or a decimal integer.
  std::string text() const;

  /// Trace form: booleans as 0/1.
  std::string trace_text() const { return std::to_string(value_); }

  friend bool operator==(const StateValue&, const StateValue&) = default;

 private:
  StateValue(DomainKind kind, std::int64_t value) : kind_(kind), value_(value) {}

  DomainKind kind_;
  std::int64_t value_;
};

/// The finite set Q of states an entity may take.
class StateDomain {
 public:
  // Integer bounds are confined to this magnitude so that every state and
  // every milieu sum is representable as a rule literal without overflow.
  static constexpr std::int64_t kMaxMagnitude = 2147483647;

  static StateDomain boolean() { return StateDomain(DomainKind::Boolean, 0, 1); }
  /// Throws DomainMismatch when lo > hi or a bound exceeds kMaxMagnitude.
  static StateDomain integer_range(std::int64_t lo, std::int64_t hi);

  DomainKind kind() const noexcept { return kind_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }

  bool contains(const StateValue& value) const noexcept;

  std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(hi_ - lo_) + 1; }
  StateValue value_at(std::uint64_t index) const;
  StateValue min_value() const { return value_at(0); }
  StateValue max_value() const { return value_at(size() - 1); }
  std::vector<StateValue> values() const;

  /// Config spelling: `bool` or `int <lo> <hi>`.
  std::string describe() const;

  friend bool operator==(const StateDomain&, const StateDomain&) = default;

 private:
  StateDomain(DomainKind kind, std::int64_t lo, std::int64_t hi) : kind_(kind), lo_(lo), hi_(hi) {}

  DomainKind kind_;
  std::int64_t lo_;
  std::int64_t hi_;
};

using StateVector = std::vector<StateValue>;

}  // namespace curb
