#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "curb/bridge/execute.hpp"
#include "curb/lang/lexer.hpp"
#include "curb/model/system.hpp"
#include "curb/state.hpp"

namespace curb::harness {

/// `every <k> for <m>`: adapt after iterations k, 2k, ..., mk.
struct AdaptationSchedule {
  std::size_t every = 1;
  std::size_t events = 0;

  friend bool operator==(const AdaptationSchedule&, const AdaptationSchedule&) = default;
};

/// A parsed and cross-checked configuration file.
struct SystemSpec {
  std::filesystem::path config_path;

  std::size_t entities = 0;
  StateDomain domain = StateDomain::boolean();
  model::TopologySpec topology;
  StateVector initial_states;
  std::uint64_t seed = 0;

  std::filesystem::path rule_file;
  lang::RuleSource rule_source;
  bool shared = true;

  std::size_t iterations = 0;
  bridge::ExecutionMode mode = bridge::ExecutionMode::Faithful;
  std::optional<AdaptationSchedule> schedule;

  /// Parameters for concretize. Without sharing the rule file is copied to
  /// every entity.
  model::MetastableParams params() const;
};

/// Line-oriented `key = value` file with [system], [init], [rules] and
/// [adaptation] sections; `#` starts a comment. Relative paths resolve
/// against the config file's directory.
///
/// Throws ConfigError with code ConfigParseError (syntax, unknown keys,
/// unreadable or missing files) or ConfigSemanticError (inconsistent values).
SystemSpec load_config(const std::filesystem::path& path);

/// Same, from text; `base_dir` anchors relative paths.
SystemSpec parse_config(std::string_view text, const std::filesystem::path& base_dir);

/// `bool` or `int <lo> <hi>`; throws ConfigSemanticError.
StateDomain parse_domain(std::string_view text);

}  // namespace curb::harness
