#pragma once

#include <cstdint>
#include <vector>

#include "curb/state.hpp"

namespace curb::bridge {

/// Inputs of one update: the entity's own state and the ordered states of its
/// milieu at the current iteration. milieuSum counts booleans as 0/1.
class BindingSet {
 public:
  BindingSet(StateValue entity_state, std::vector<StateValue> milieu_states);

  const StateValue& entity_state() const noexcept { return entity_state_; }
  const std::vector<StateValue>& milieu_states() const noexcept { return milieu_states_; }
  std::int64_t milieu_sum() const noexcept { return milieu_sum_; }
  std::int64_t milieu_count() const noexcept { return static_cast<std::int64_t>(milieu_states_.size()); }

 private:
  StateValue entity_state_;
  std::vector<StateValue> milieu_states_;
  std::int64_t milieu_sum_;
};

}  // namespace curb::bridge
