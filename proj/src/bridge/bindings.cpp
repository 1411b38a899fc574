#include "curb/bridge/bindings.hpp"

#include <numeric>
#include <utility>

namespace curb::bridge {

BindingSet::BindingSet(StateValue entity_state, std::vector<StateValue> milieu_states)
    : entity_state_(entity_state),
      milieu_states_(std::move(milieu_states)),
      milieu_sum_(std::accumulate(milieu_states_.begin(), milieu_states_.end(), std::int64_t{0},
                                  [](std::int64_t acc, const StateValue& v) { return acc + v.numeric(); })) {}

}  // namespace curb::bridge
