#include "curb/model/system.hpp"

#include <algorithm>
#include <utility>

#include "curb/error.hpp"

namespace curb::model {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Virtual: return "virtual";
    case Regime::Metastable: return "metastable";
    case Regime::Actual: return "actual";
  }
  return "?";
}

std::size_t MetastableSystem::milieu_count_for_slot(std::size_t slot) const {
  if (params.sharing == RuleSharing::PerEntity) return milieus.at(slot).size();
  std::size_t smallest = milieus.empty() ? 0 : milieus.front().size();
  for (const Milieu& m : milieus) smallest = std::min(smallest, m.size());
  return smallest;
}

StateVector ActualSystem::states() const {
  StateVector out;
  out.reserve(entities.size());
  for (const Entity& e : entities) out.push_back(e.state);
  return out;
}

Regime SystemModel::regime() const {
  switch (state_.index()) {
    case 1: return Regime::Virtual;
    case 2: return Regime::Metastable;
    case 3: return Regime::Actual;
    default: throw Error(ErrorCode::Usage, "system has not been defined; call define_virtual first");
  }
}

namespace {

[[noreturn]] void wrong_regime(const SystemModel& s, Regime wanted) {
  if (!s.defined()) throw Error(ErrorCode::Usage, "system has not been defined; call define_virtual first");
  throw Error(ErrorCode::Usage, "operation needs a " + std::string(to_string(wanted)) + " system, got " +
                                    std::string(to_string(s.regime())));
}

}  // namespace

const VirtualSystem& SystemModel::as_virtual() const {
  if (auto* v = std::get_if<VirtualSystem>(&state_)) return *v;
  wrong_regime(*this, Regime::Virtual);
}

const MetastableSystem& SystemModel::as_metastable() const {
  if (auto* m = std::get_if<MetastableSystem>(&state_)) return *m;
  wrong_regime(*this, Regime::Metastable);
}

const ActualSystem& SystemModel::as_actual() const {
  if (auto* a = std::get_if<ActualSystem>(&state_)) return *a;
  wrong_regime(*this, Regime::Actual);
}

ActualSystem& SystemModel::as_actual() {
  if (auto* a = std::get_if<ActualSystem>(&state_)) return *a;
  wrong_regime(*this, Regime::Actual);
}

SystemModel define_virtual(DomainKind kind, const lang::Vocabulary& vocabulary) {
  VirtualSystem v;
  v.domain_kind = kind;
  v.vocabulary = &vocabulary;
  v.concepts = {"entity", "state", "milieu", "update function", "update rules", "adaptation function"};
  return SystemModel(std::move(v));
}

SystemModel concretize(const SystemModel& virtual_system, MetastableParams params) {
  const VirtualSystem& basis = virtual_system.as_virtual();

  if (params.domain.kind() != basis.domain_kind) {
    throw Error(ErrorCode::DomainMismatch, "state domain " + params.domain.describe() +
                                               " does not match the declared " +
                                               std::string(to_string(basis.domain_kind)) + " kind");
  }
  if (params.entity_count == 0) throw Error(ErrorCode::CountMismatch, "entity count must be positive");
  if (params.initial_states.size() != params.entity_count) {
    throw Error(ErrorCode::CountMismatch, std::to_string(params.initial_states.size()) + " initial states for " +
                                              std::to_string(params.entity_count) + " entities");
  }
  for (std::size_t i = 0; i < params.initial_states.size(); ++i) {
    if (!params.domain.contains(params.initial_states[i])) {
      throw Error(ErrorCode::DomainMismatch, "initial state " + params.initial_states[i].text() + " of entity " +
                                                 std::to_string(i) + " is outside " + params.domain.describe());
    }
  }
  const std::size_t wanted_sources = params.sharing == RuleSharing::Shared ? 1 : params.entity_count;
  if (params.rule_sources.size() != wanted_sources) {
    throw Error(ErrorCode::CountMismatch, std::to_string(params.rule_sources.size()) + " rule sources, expected " +
                                              std::to_string(wanted_sources));
  }

  MetastableSystem m;
  m.basis = basis;
  m.milieus = build_topology(params.topology, params.entity_count);
  m.params = std::move(params);
  return SystemModel(std::move(m));
}

SystemModel actualize(const SystemModel& metastable) {
  const MetastableSystem& m = metastable.as_metastable();

  ActualSystem a;
  a.basis = m;
  a.iteration = m.origin_iteration;
  a.programs.reserve(m.params.rule_sources.size());
  for (std::size_t slot = 0; slot < m.params.rule_sources.size(); ++slot) {
    a.programs.push_back(lang::compile(m.params.rule_sources[slot], m.params.domain, m.milieu_count_for_slot(slot)));
  }
  a.entities.reserve(m.params.entity_count);
  for (std::size_t i = 0; i < m.params.entity_count; ++i) {
    a.entities.push_back(Entity{i, m.params.initial_states[i], m.milieus[i], m.rule_slot(i)});
  }
  return SystemModel(std::move(a));
}

SystemModel deactualize(const SystemModel& actual) {
  const ActualSystem& a = actual.as_actual();
  MetastableSystem m = a.basis;
  m.params.initial_states = a.states();
  m.origin_iteration = a.iteration;
  return SystemModel(std::move(m));
}

void step_in_place(ActualSystem& actual, bridge::ExecutionMode mode) {
  const StateVector snapshot = actual.states();
  const auto& sources = actual.basis.params.rule_sources;
  StateVector next(snapshot.size(), snapshot.front());

  for (const Entity& e : actual.entities) {
    std::vector<StateValue> milieu_states;
    milieu_states.reserve(e.milieu.size());
    for (std::size_t j : e.milieu.neighbors) milieu_states.push_back(snapshot[j]);
    const bridge::BindingSet bindings(snapshot[e.index], std::move(milieu_states));
    try {
      next[e.index] = bridge::execute(mode, sources[e.rule_slot], actual.programs[e.rule_slot], bindings);
    } catch (Error& err) {
      err.annotate(e.index, actual.iteration);
      throw;
    }
  }

  for (Entity& e : actual.entities) e.state = next[e.index];
  ++actual.iteration;
}

SystemModel step(const SystemModel& actual, bridge::ExecutionMode mode) {
  ActualSystem next = actual.as_actual();
  step_in_place(next, mode);
  return SystemModel(std::move(next));
}

Trajectory run(SystemModel& actual, std::size_t iterations, bridge::ExecutionMode mode) {
  ActualSystem& a = actual.as_actual();
  Trajectory out;
  out.first_iteration = a.iteration;
  out.iterations.reserve(iterations + 1);
  out.iterations.push_back(a.states());
  for (std::size_t k = 0; k < iterations; ++k) {
    step_in_place(a, mode);
    out.iterations.push_back(a.states());
  }
  return out;
}

}  // namespace curb::model
