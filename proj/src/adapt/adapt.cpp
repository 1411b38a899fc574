#include "curb/adapt/adapt.hpp"

#include <optional>
#include <string>

#include "curb/adapt/lineage.hpp"
#include "curb/error.hpp"
#include "curb/lang/parser.hpp"
#include "curb/lang/render.hpp"

namespace curb::adapt {

namespace {

bool is_language_error(ErrorCode code) {
  return code == ErrorCode::VocabularyViolation || code == ErrorCode::LexError ||
         code == ErrorCode::SyntaxError || code == ErrorCode::ValidationError;
}

}  // namespace

model::SystemModel adapt(const model::SystemModel& metastable, const MutationPolicy& policy, std::uint64_t seed,
                         IdentifierCounter& counter) {
  const model::MetastableSystem& parent = metastable.as_metastable();
  policy.check();

  Rng rng(seed);
  const bool shared = parent.params.sharing == model::RuleSharing::Shared;
  const std::size_t slot = shared ? 0 : static_cast<std::size_t>(rng.below(parent.params.entity_count));
  const StateDomain& domain = parent.params.domain;
  const std::size_t milieu_count = parent.milieu_count_for_slot(slot);

  const lang::RuleProgram parent_program = lang::compile(parent.params.rule_sources[slot], domain, milieu_count);

  std::string last_failure;
  for (std::size_t attempt = 0; attempt < policy.max_retries; ++attempt) {
    std::optional<Mutation> mutation;
    try {
      mutation = mutate(parent_program, policy, rng, counter);
      lang::validate(mutation->candidate, domain, milieu_count);
      lang::RuleSource child_source = lang::render_source(mutation->candidate);
      const lang::RuleProgram reparsed = lang::compile(child_source, domain, milieu_count);

      model::MetastableSystem child = parent;
      child.params.rule_sources[slot] = std::move(child_source);

      LineageRecord record;
      record.generation = parent.lineage.size() + 1;
      record.parent_hash = source_hash(parent_program.ast());
      record.child_hash = source_hash(reparsed.ast());
      record.op = mutation->descriptor.op;
      if (!shared) record.entity = slot;
      record.seed = seed;
      record.iteration = parent.origin_iteration;
      record.descriptor = std::move(mutation->descriptor);
      child.lineage.append(std::move(record));
      return model::SystemModel(std::move(child));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoApplicableOperator && !is_language_error(e.code())) throw;
      last_failure = e.what();
    }
  }
  throw Error(ErrorCode::AdaptationFailed, std::to_string(policy.max_retries) +
                                               " consecutive candidates rejected; last: " + last_failure);
}

}  // namespace curb::adapt
