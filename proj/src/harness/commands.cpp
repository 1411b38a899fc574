#include "curb/harness/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "curb/adapt/adapt.hpp"
#include "curb/adapt/identifier.hpp"
#include "curb/error.hpp"
#include "curb/harness/trace.hpp"
#include "curb/lang/parser.hpp"
#include "curb/lang/render.hpp"

namespace curb::harness {

namespace fs = std::filesystem;

std::uint64_t event_seed(std::uint64_t seed, std::uint64_t generation) {
  // splitmix64 finalizer over seed + g * golden ratio.
  std::uint64_t z = seed + generation * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

adapt::IdentifierCounter counter_for(const model::MetastableParams& params) {
  std::uint64_t next = 0;
  for (const lang::RuleSource& source : params.rule_sources) {
    next = std::max(next, adapt::IdentifierCounter::after(lang::parse_source(source)).next());
  }
  return adapt::IdentifierCounter(next);
}

fs::path with_suffix(const fs::path& config, const std::string& suffix) {
  fs::path p = config;
  p.replace_extension(suffix);
  return p;
}

int report(const Error& e, std::ostream& err) {
  err << "curb: " << e.what() << '\n';
  return exit_code_for(e.code());
}

}  // namespace

SimulationResult simulate(const SystemSpec& spec, const adapt::MutationPolicy& policy) {
  model::SystemModel system =
      model::actualize(model::concretize(model::define_virtual(spec.domain.kind()), spec.params()));
  adapt::IdentifierCounter counter = counter_for(system.as_actual().basis.params);

  SimulationResult result;
  result.trajectory.first_iteration = system.as_actual().iteration;
  result.trajectory.iterations.push_back(system.as_actual().states());

  std::size_t events = 0;
  for (std::size_t t = 1; t <= spec.iterations; ++t) {
    model::step_in_place(system.as_actual(), spec.mode);
    result.trajectory.iterations.push_back(system.as_actual().states());
    if (spec.schedule && events < spec.schedule->events && t % spec.schedule->every == 0) {
      ++events;
      model::SystemModel meta = model::deactualize(system);
      meta = adapt::adapt(meta, policy, event_seed(spec.seed, events), counter);
      system = model::actualize(meta);
    }
  }
  result.lineage = system.as_actual().basis.lineage;
  result.final_system = std::move(system);
  return result;
}

model::SystemModel adapt_events(const SystemSpec& spec, std::size_t events, const adapt::MutationPolicy& policy) {
  model::SystemModel meta = model::concretize(model::define_virtual(spec.domain.kind()), spec.params());
  adapt::IdentifierCounter counter = counter_for(meta.as_metastable().params);
  for (std::size_t g = 1; g <= events; ++g) meta = adapt::adapt(meta, policy, event_seed(spec.seed, g), counter);
  return meta;
}

int run_command(const fs::path& config, const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const SystemSpec spec = load_config(config);
    const SimulationResult result = simulate(spec);
    const fs::path trace = options.trace.value_or(with_suffix(config, ".trace"));
    write_trace(result.trajectory, trace);
    out << "wrote " << result.trajectory.iterations.size() << " iterations to " << trace.string() << '\n';
    if (spec.schedule) {
      const fs::path lineage = options.lineage.value_or(with_suffix(config, ".lineage"));
      write_text(lineage, result.lineage.log());
      out << "wrote " << result.lineage.size() << " lineage records to " << lineage.string() << '\n';
    }
    return 0;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int validate_command(const fs::path& rule_file, const std::string& domain, std::size_t milieu_count,
                     std::ostream& out, std::ostream& err) {
  try {
    const StateDomain d = parse_domain(domain);
    const lang::RuleProgram program = lang::compile(lang::RuleSource{read_text(rule_file)}, d, milieu_count);
    out << lang::render(program.ast()) << '\n';
    return 0;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int adapt_command(const fs::path& config, const AdaptOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const SystemSpec spec = load_config(config);
    const model::SystemModel adapted = adapt_events(spec, options.events);
    const model::MetastableSystem& meta = adapted.as_metastable();
    const fs::path target = options.out.value_or(with_suffix(config, ".adapted.curb"));
    if (spec.shared) {
      write_text(target, meta.params.rule_sources.front().text + "\n");
      out << "wrote " << target.string() << '\n';
    } else {
      for (std::size_t i = 0; i < meta.params.rule_sources.size(); ++i) {
        fs::path p = target;
        p.replace_filename(target.stem().string() + "." + std::to_string(i) + target.extension().string());
        write_text(p, meta.params.rule_sources[i].text + "\n");
      }
      out << "wrote " << meta.params.rule_sources.size() << " rule files next to " << target.string() << '\n';
    }
    const fs::path lineage = options.lineage.value_or(with_suffix(config, ".lineage"));
    write_text(lineage, meta.lineage.log());
    out << meta.lineage.log();
    return 0;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int trace_diff_command(const fs::path& a, const fs::path& b, std::ostream& out, std::ostream& err) {
  std::string left;
  std::string right;
  try {
    left = read_text(a);
    right = read_text(b);
  } catch (const Error& e) {
    err << "curb: " << e.what() << '\n';
    return 2;
  }
  if (left == right) {
    out << "identical\n";
    return 0;
  }
  std::istringstream l(left);
  std::istringstream r(right);
  std::string ll;
  std::string rl;
  for (std::size_t line = 1;; ++line) {
    const bool lok = static_cast<bool>(std::getline(l, ll));
    const bool rok = static_cast<bool>(std::getline(r, rl));
    if (!lok && !rok) {
      // Only trailing bytes differ, e.g. a missing final newline.
      out << "differ at line " << line << ": trailing newline\n";
      return 1;
    }
    if (!lok || !rok || ll != rl) {
      out << "differ at line " << line << '\n';
      out << "< " << (lok ? ll : std::string("<end of file>")) << '\n';
      out << "> " << (rok ? rl : std::string("<end of file>")) << '\n';
      return 1;
    }
  }
}

}  // namespace curb::harness
