#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "curb/adapt/lineage.hpp"
#include "curb/adapt/mutation.hpp"
#include "curb/harness/config.hpp"
#include "curb/model/system.hpp"

namespace curb::harness {

/// Seed for the g-th adaptation event (g >= 1) of a run seeded with `seed`.
std::uint64_t event_seed(std::uint64_t seed, std::uint64_t generation);

struct SimulationResult {
  model::Trajectory trajectory;
  adapt::RuleLineage lineage;
  model::SystemModel final_system;
};

/// Builds the system from a spec and runs it for spec.iterations, adapting
/// after every k-th iteration while events remain in the schedule.
SimulationResult simulate(const SystemSpec& spec, const adapt::MutationPolicy& policy = {});

/// `m` adaptation events back to back on the metastable system, no stepping.
model::SystemModel adapt_events(const SystemSpec& spec, std::size_t events, const adapt::MutationPolicy& policy = {});

struct RunOptions {
  std::optional<std::filesystem::path> trace;    // default: <config>.trace
  std::optional<std::filesystem::path> lineage;  // default: <config>.lineage
};

struct AdaptOptions {
  std::size_t events = 1;
  std::optional<std::filesystem::path> out;      // default: <config>.adapted.curb
  std::optional<std::filesystem::path> lineage;  // default: <config>.lineage
};

// Each command reports failures on `err` as `curb: <message>` and returns
// the process exit status.

/// Writes the trace only when the whole run succeeds. The lineage file is
/// written when the config has an adaptation schedule.
int run_command(const std::filesystem::path& config, const RunOptions& options, std::ostream& out,
                std::ostream& err);

/// Checks a rule file against a domain (`bool` / `int lo hi`) and milieu size;
/// prints the canonical rendering on success.
int validate_command(const std::filesystem::path& rule_file, const std::string& domain, std::size_t milieu_count,
                     std::ostream& out, std::ostream& err);

/// Writes the adapted rule source(s) and the lineage log. Per-entity systems
/// write one file per entity, `<out-stem>.<i><ext>`.
int adapt_command(const std::filesystem::path& config, const AdaptOptions& options, std::ostream& out,
                  std::ostream& err);

/// 0 and `identical` when equal, 1 and the first differing line otherwise,
/// 2 when a file cannot be read.
int trace_diff_command(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out,
                       std::ostream& err);

}  // namespace curb::harness
