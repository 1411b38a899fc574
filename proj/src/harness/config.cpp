#include "curb/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "curb/error.hpp"

namespace curb::harness {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& detail) {
  throw ConfigError(ErrorCode::ConfigParseError, line, detail);
}

[[noreturn]] void semantic_error(std::size_t line, const std::string& detail) {
  throw ConfigError(ErrorCode::ConfigSemanticError, line, detail);
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Entry {
  std::string value;
  std::size_t line;
};

std::size_t unsigned_value(const Entry& e, std::string_view key) {
  auto v = to_int<std::size_t>(e.value);
  if (!v) parse_error(e.line, std::string(key) + " must be a non-negative integer, got \"" + e.value + "\"");
  return *v;
}

bool bool_value(const Entry& e, std::string_view key) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  parse_error(e.line, std::string(key) + " must be true or false, got \"" + e.value + "\"");
}

std::string read_file(const fs::path& path, std::size_t line, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error(line, std::string(what) + " " + path.string() + ": file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

model::ExplicitTopology read_adjacency(const fs::path& path, std::size_t line) {
  const std::string text = read_file(path, line, "adjacency file");
  model::ExplicitTopology topo;
  std::istringstream in(text);
  std::string row;
  std::size_t row_no = 0;
  while (std::getline(in, row)) {
    ++row_no;
    std::string cleaned = row;
    for (char& c : cleaned) {
      if (c == ',') c = ' ';
    }
    std::vector<std::size_t> neighbors;
    for (std::string_view w : words(trim(cleaned))) {
      auto v = to_int<std::size_t>(w);
      if (!v) parse_error(line, path.string() + " row " + std::to_string(row_no) + ": bad index \"" + std::string(w) + "\"");
      neighbors.push_back(*v);
    }
    topo.adjacency.push_back(std::move(neighbors));
  }
  return topo;
}

StateValue state_value(std::string_view text, const StateDomain& domain, std::size_t line) {
  if (domain.kind() == DomainKind::Boolean) {
    if (text == "true" || text == "1") return StateValue::boolean(true);
    if (text == "false" || text == "0") return StateValue::boolean(false);
    parse_error(line, "\"" + std::string(text) + "\" is not a boolean state");
  }
  auto v = to_int<std::int64_t>(text);
  if (!v) parse_error(line, "\"" + std::string(text) + "\" is not an integer state");
  return StateValue::integer(*v);
}

}  // namespace

StateDomain parse_domain(std::string_view text) {
  const auto w = words(trim(text));
  if (w.size() == 1 && w[0] == "bool") return StateDomain::boolean();
  if (w.size() == 3 && w[0] == "int") {
    auto lo = to_int<std::int64_t>(w[1]);
    auto hi = to_int<std::int64_t>(w[2]);
    if (lo && hi) {
      try {
        return StateDomain::integer_range(*lo, *hi);
      } catch (const Error& e) {
        semantic_error(0, e.detail());
      }
    }
  }
  semantic_error(0, "state domain must be `bool` or `int <lo> <hi>`, got \"" + std::string(text) + "\"");
}

SystemSpec parse_config(std::string_view text, const fs::path& base_dir) {
  static const std::map<std::string, std::vector<std::string>> kSections = {
      {"system", {"entities", "state_domain", "topology", "include_self", "iterations", "seed", "mode"}},
      {"init", {"states"}},
      {"rules", {"file", "shared"}},
      {"adaptation", {"schedule"}},
  };

  std::map<std::string, Entry> entries;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_error(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (kSections.count(section) == 0) parse_error(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (section.empty()) parse_error(line_no, "key \"" + key + "\" outside any section");
    const auto& allowed = kSections.at(section);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      parse_error(line_no, "unknown key \"" + key + "\" in [" + section + "]");
    }
    if (value.empty()) parse_error(line_no, "empty value for \"" + key + "\"");
    if (!entries.emplace(key, Entry{value, line_no}).second) parse_error(line_no, "duplicate key \"" + key + "\"");
  }

  auto required = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) semantic_error(0, "missing required key \"" + key + "\"");
    return it->second;
  };
  auto optional = [&](const std::string& key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  SystemSpec spec;

  const Entry& entities = required("entities");
  spec.entities = unsigned_value(entities, "entities");
  if (spec.entities == 0) semantic_error(entities.line, "entities must be positive");

  const Entry& domain = required("state_domain");
  try {
    spec.domain = parse_domain(domain.value);
  } catch (const ConfigError& e) {
    semantic_error(domain.line, e.detail());
  }

  if (const Entry* e = optional("include_self")) spec.topology.include_self = bool_value(*e, "include_self");

  const Entry& topology = required("topology");
  {
    const auto w = words(topology.value);
    if (w.size() == 2 && w[0] == "ring") {
      auto r = to_int<std::size_t>(w[1]);
      if (!r) parse_error(topology.line, "ring radius must be a non-negative integer");
      spec.topology.shape = model::RingTopology{*r};
    } else if (w.size() == 5 && w[0] == "grid") {
      auto width = to_int<std::size_t>(w[1]);
      auto height = to_int<std::size_t>(w[2]);
      if (!width || !height) parse_error(topology.line, "grid dimensions must be integers");
      model::GridTopology g{*width, *height, model::Neighborhood::Moore, true};
      if (w[3] == "moore") g.neighborhood = model::Neighborhood::Moore;
      else if (w[3] == "vonneumann") g.neighborhood = model::Neighborhood::VonNeumann;
      else parse_error(topology.line, "grid neighborhood must be moore or vonneumann");
      if (w[4] == "wrap") g.wrap = true;
      else if (w[4] == "nowrap") g.wrap = false;
      else parse_error(topology.line, "grid edge mode must be wrap or nowrap");
      if (g.width * g.height != spec.entities) {
        semantic_error(topology.line, "grid " + std::to_string(g.width) + "x" + std::to_string(g.height) +
                                          " does not hold " + std::to_string(spec.entities) + " entities");
      }
      spec.topology.shape = g;
    } else if (w.size() == 2 && w[0] == "explicit") {
      model::ExplicitTopology e = read_adjacency(base_dir / fs::path(std::string(w[1])), topology.line);
      if (e.adjacency.size() != spec.entities) {
        semantic_error(topology.line, "adjacency file has " + std::to_string(e.adjacency.size()) + " rows for " +
                                          std::to_string(spec.entities) + " entities");
      }
      spec.topology.shape = std::move(e);
    } else {
      parse_error(topology.line, "topology must be `ring <r>`, `grid <w> <h> moore|vonneumann wrap|nowrap` "
                                 "or `explicit <file>`");
    }
  }

  if (const Entry* e = optional("iterations")) spec.iterations = unsigned_value(*e, "iterations");
  if (const Entry* e = optional("seed")) {
    auto v = to_int<std::uint64_t>(e->value);
    if (!v) parse_error(e->line, "seed must be a non-negative integer");
    spec.seed = *v;
  }
  if (const Entry* e = optional("mode")) {
    if (e->value == "faithful") spec.mode = bridge::ExecutionMode::Faithful;
    else if (e->value == "bound") spec.mode = bridge::ExecutionMode::Bound;
    else parse_error(e->line, "mode must be faithful or bound");
  }

  const Entry& states = required("states");
  {
    const auto w = words(states.value);
    const StateValue background = spec.domain.min_value();
    const StateValue marked = spec.domain.max_value();
    if (!w.empty() && (w[0] == "impulse" || w[0] == "set")) {
      if (w.size() != 2) parse_error(states.line, std::string(w[0]) + " expects a comma-separated index list");
      spec.initial_states.assign(spec.entities, background);
      const auto indices = split(w[1], ',');
      if (w[0] == "impulse" && indices.size() != 1) parse_error(states.line, "impulse takes exactly one index");
      for (std::string_view idx : indices) {
        auto i = to_int<std::size_t>(idx);
        if (!i) parse_error(states.line, "bad entity index \"" + std::string(idx) + "\"");
        if (*i >= spec.entities) {
          semantic_error(states.line, "index " + std::to_string(*i) + " is outside " +
                                          std::to_string(spec.entities) + " entities");
        }
        spec.initial_states[*i] = marked;
      }
    } else {
      for (std::string_view v : split(states.value, ',')) {
        spec.initial_states.push_back(state_value(v, spec.domain, states.line));
      }
      if (spec.initial_states.size() != spec.entities) {
        semantic_error(states.line, std::to_string(spec.initial_states.size()) + " states listed for " +
                                        std::to_string(spec.entities) + " entities");
      }
    }
    for (std::size_t i = 0; i < spec.initial_states.size(); ++i) {
      if (!spec.domain.contains(spec.initial_states[i])) {
        semantic_error(states.line, "state " + spec.initial_states[i].text() + " of entity " + std::to_string(i) +
                                        " is outside " + spec.domain.describe());
      }
    }
  }

  const Entry& file = required("file");
  spec.rule_file = base_dir / fs::path(file.value);
  spec.rule_source = lang::RuleSource{read_file(spec.rule_file, file.line, "rule file")};
  if (const Entry* e = optional("shared")) spec.shared = bool_value(*e, "shared");

  if (const Entry* e = optional("schedule")) {
    const auto w = words(e->value);
    if (w.size() == 1 && w[0] == "none") {
      spec.schedule.reset();
    } else if (w.size() == 4 && w[0] == "every" && w[2] == "for") {
      auto k = to_int<std::size_t>(w[1]);
      auto m = to_int<std::size_t>(w[3]);
      if (!k || !m) parse_error(e->line, "schedule counts must be non-negative integers");
      if (*k == 0) semantic_error(e->line, "schedule interval must be at least 1");
      spec.schedule = AdaptationSchedule{*k, *m};
    } else {
      parse_error(e->line, "schedule must be `none` or `every <k> for <m>`");
    }
  }

  return spec;
}

SystemSpec load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(ErrorCode::ConfigParseError, 0, path.string() + ": file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  SystemSpec spec = parse_config(buf.str(), path.parent_path());
  spec.config_path = path;
  return spec;
}

model::MetastableParams SystemSpec::params() const {
  model::MetastableParams p;
  p.entity_count = entities;
  p.domain = domain;
  p.topology = topology;
  p.initial_states = initial_states;
  p.sharing = shared ? model::RuleSharing::Shared : model::RuleSharing::PerEntity;
  p.rule_sources.assign(shared ? 1 : entities, rule_source);
  p.seed = seed;
  return p;
}

}  // namespace curb::harness
