#pragma once

#include <cstdint>

#include "curb/adapt/identifier.hpp"
#include "curb/adapt/mutation.hpp"
#include "curb/model/system.hpp"

namespace curb::adapt {

/// The adaptation function: mutates exactly one rule source of a metastable
/// system and nothing else.
///
/// Candidates are drawn from `mutate` with an Rng seeded by `seed` and must
/// pass validation both as a tree and again as rendered text before being
/// installed. Every other field of the system is copied unchanged and one
/// lineage record is appended. After `policy.max_retries` consecutive
/// rejected candidates (or operators with no site) throws AdaptationFailed.
model::SystemModel adapt(const model::SystemModel& metastable, const MutationPolicy& policy, std::uint64_t seed,
                         IdentifierCounter& counter);

}  // namespace curb::adapt
