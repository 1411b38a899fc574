#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "curb/adapt/lineage.hpp"
#include "curb/bridge/execute.hpp"
#include "curb/lang/lexer.hpp"
#include "curb/lang/validator.hpp"
#include "curb/model/topology.hpp"
#include "curb/state.hpp"

namespace curb::model {

enum class Regime { Virtual, Metastable, Actual };

std::string_view to_string(Regime regime);

enum class RuleSharing { Shared, PerEntity };

/// The most abstract description: what kind of state entities carry and the
/// vocabulary rules are written in. Nothing is bound yet.
struct VirtualSystem {
  DomainKind domain_kind = DomainKind::Boolean;
  const lang::Vocabulary* vocabulary = nullptr;
  std::vector<std::string> concepts;

  friend bool operator==(const VirtualSystem&, const VirtualSystem&) = default;
};

/// Everything concretize binds.
struct MetastableParams {
  std::size_t entity_count = 0;
  StateDomain domain = StateDomain::boolean();
  TopologySpec topology;
  StateVector initial_states;
  // One source when shared, one per entity otherwise.
  std::vector<lang::RuleSource> rule_sources;
  RuleSharing sharing = RuleSharing::Shared;
  std::uint64_t seed = 0;

  friend bool operator==(const MetastableParams&, const MetastableParams&) = default;
};

struct MetastableSystem {
  VirtualSystem basis;
  MetastableParams params;
  std::vector<Milieu> milieus;
  // Iteration number the next actualization starts counting from.
  std::uint64_t origin_iteration = 0;
  adapt::RuleLineage lineage;

  std::size_t rule_slot(std::size_t entity) const {
    return params.sharing == RuleSharing::Shared ? 0 : entity;
  }

  /// Milieu size a rule slot is validated against: the entity's own milieu
  /// for per-entity rules, the smallest milieu for a shared rule.
  std::size_t milieu_count_for_slot(std::size_t slot) const;

  friend bool operator==(const MetastableSystem&, const MetastableSystem&) = default;
};

struct Entity {
  std::size_t index = 0;
  StateValue state = StateValue::boolean(false);
  Milieu milieu;
  std::size_t rule_slot = 0;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct ActualSystem {
  MetastableSystem basis;
  std::vector<Entity> entities;
  std::vector<lang::RuleProgram> programs;  // indexed by rule slot
  std::uint64_t iteration = 0;

  StateVector states() const;
};

/// A system in one of the three regimes, or not yet defined at all.
class SystemModel {
 public:
  SystemModel() = default;
  explicit SystemModel(VirtualSystem v) : state_(std::move(v)) {}
  explicit SystemModel(MetastableSystem m) : state_(std::move(m)) {}
  explicit SystemModel(ActualSystem a) : state_(std::move(a)) {}

  bool defined() const noexcept { return !std::holds_alternative<std::monostate>(state_); }
  /// Throws Usage when undefined.
  Regime regime() const;

  // Each throws Usage when the system is in another regime.
  const VirtualSystem& as_virtual() const;
  const MetastableSystem& as_metastable() const;
  const ActualSystem& as_actual() const;
  ActualSystem& as_actual();

 private:
  std::variant<std::monostate, VirtualSystem, MetastableSystem, ActualSystem> state_;
};

/// Virtual system over the given vocabulary with the metamodel's concepts declared.
SystemModel define_virtual(DomainKind kind, const lang::Vocabulary& vocabulary = lang::Vocabulary::standard());

/// Binds all parameters. Rule sources are stored verbatim; nothing is
/// compiled yet. Throws Usage (not virtual), CountMismatch, DomainMismatch,
/// ExplicitIndexOutOfRange.
SystemModel concretize(const SystemModel& virtual_system, MetastableParams params);

/// Compiles every rule source and instantiates entities at the origin iteration.
/// Propagates VocabularyViolation, LexError, SyntaxError and ValidationError.
SystemModel actualize(const SystemModel& metastable);

/// Projects an actual system back to its parameters, with the current states
/// as the new initial states and the current iteration as the origin.
SystemModel deactualize(const SystemModel& actual);

/// One synchronous update: every entity reads the iteration-t snapshot. Rule
/// failures carry the entity index and t.
SystemModel step(const SystemModel& actual, bridge::ExecutionMode mode);
void step_in_place(ActualSystem& actual, bridge::ExecutionMode mode);

/// State vectors for iterations first_iteration .. first_iteration + T.
struct Trajectory {
  std::uint64_t first_iteration = 0;
  std::vector<StateVector> iterations;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Records the current state then advances `iterations` times.
Trajectory run(SystemModel& actual, std::size_t iterations, bridge::ExecutionMode mode);

}  // namespace curb::model
