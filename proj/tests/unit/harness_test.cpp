#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "curb/harness/commands.hpp"
#include "curb/harness/config.hpp"
#include "curb/harness/trace.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace curb::harness {
namespace {

namespace fs = std::filesystem;
using testing::data_path;
using testing::error_code_of;

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::optional<std::size_t> config_error_line(const std::string& text, const fs::path& dir = data_path("")) {
  try {
    parse_config(text, dir);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return std::nullopt;
}

const char* kMinimal = "[system]\nentities = 3\nstate_domain = int 0 1\ntopology = ring 1\n"
                       "[init]\nstates = 0,1,0\n[rules]\nfile = rule110.curb\n";

TEST(Config, Rule110FieldMapping) {
  const SystemSpec spec = load_config(data_path("rule110.conf"));
  EXPECT_EQ(spec.entities, 64u);
  EXPECT_EQ(spec.domain, StateDomain::integer_range(0, 1));
  EXPECT_EQ(std::get<model::RingTopology>(spec.topology.shape).radius, 1u);
  EXPECT_FALSE(spec.topology.include_self);
  EXPECT_EQ(spec.iterations, 100u);
  EXPECT_EQ(spec.seed, 42u);
  EXPECT_EQ(spec.mode, bridge::ExecutionMode::Faithful);
  EXPECT_TRUE(spec.shared);
  EXPECT_EQ(spec.initial_states.size(), 64u);
  EXPECT_EQ(spec.initial_states[32], StateValue::integer(1));
  EXPECT_EQ(spec.initial_states[31], StateValue::integer(0));
  EXPECT_EQ(spec.rule_source, testing::rule110_source());
  EXPECT_FALSE(spec.schedule.has_value());
}

TEST(Config, GliderAndSchedule) {
  const SystemSpec life = load_config(data_path("life_glider.conf"));
  const auto& grid = std::get<model::GridTopology>(life.topology.shape);
  EXPECT_EQ(grid.width, 16u);
  EXPECT_TRUE(grid.wrap);
  EXPECT_EQ(life.mode, bridge::ExecutionMode::Bound);
  const SystemSpec adaptive = load_config(data_path("rule110_adaptive.conf"));
  ASSERT_TRUE(adaptive.schedule.has_value());
  EXPECT_EQ(*adaptive.schedule, (AdaptationSchedule{10, 3}));
}

TEST(Config, ZeroEntitiesIsSemanticError) {
  std::string text = kMinimal;
  text.replace(text.find("entities = 3"), 12, "entities = 0");
  EXPECT_EQ(error_code_of([&] { parse_config(text, data_path("")); }), ErrorCode::ConfigSemanticError);
}

TEST(Config, MissingRuleFile) {
  std::string text = kMinimal;
  text.replace(text.find("rule110.curb"), 12, "nowhere.curb");
  try {
    parse_config(text, data_path(""));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigParseError);
    EXPECT_NE(std::string(e.what()).find("file not found"), std::string::npos);
    EXPECT_EQ(e.line(), 8u);
  }
}

TEST(Config, ParseErrorsCarryLines) {
  EXPECT_EQ(config_error_line("[system]\nentities 3\n"), 2u);
  EXPECT_EQ(config_error_line("[system]\nentities = 3\nentities = 4\n"), 3u);
  EXPECT_EQ(config_error_line("[nowhere]\n"), 1u);
  EXPECT_EQ(config_error_line("entities = 3\n"), 1u);
  EXPECT_EQ(config_error_line("[init]\nentities = 3\n"), 2u);
  EXPECT_EQ(config_error_line("[system]\nentities = three\n"), 2u);
}

TEST(Config, SemanticErrors) {
  auto code = [](std::string from, std::string to) {
    std::string text = kMinimal;
    text.replace(text.find(from), from.size(), to);
    return error_code_of([&] { parse_config(text, data_path("")); });
  };
  EXPECT_EQ(code("states = 0,1,0", "states = 0,1"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("states = 0,1,0", "states = 0,1,2"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("states = 0,1,0", "states = impulse 3"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("int 0 1", "int 2 1"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("int 0 1", "float"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("ring 1", "grid 2 2 moore wrap"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("ring 1", "hex 3"), ErrorCode::ConfigParseError);
  EXPECT_EQ(code("[rules]\nfile = rule110.curb\n", "[system]\n"), ErrorCode::ConfigSemanticError);
  EXPECT_EQ(code("[rules]\nfile = rule110.curb\n", "[rules]\nshared = true\n"), ErrorCode::ConfigSemanticError);
}

TEST(Config, BooleanStatesAndComments) {
  const fs::path dir = testing::scratch_dir("config_bool");
  write(dir / "r.curb", "emit not entityState ;\n");
  const SystemSpec spec = parse_config(
      "# comment\n[system]\nentities = 3  # three cells\nstate_domain = bool\ntopology = ring 1\ninclude_self = true\n"
      "[init]\nstates = true,0,false\n[rules]\nfile = r.curb\nshared = false\n[adaptation]\nschedule = none\n",
      dir);
  EXPECT_EQ(spec.initial_states,
            (StateVector{StateValue::boolean(true), StateValue::boolean(false), StateValue::boolean(false)}));
  EXPECT_TRUE(spec.topology.include_self);
  EXPECT_FALSE(spec.shared);
  EXPECT_EQ(spec.params().rule_sources.size(), 3u);
}

TEST(Config, ExplicitAdjacencyFile) {
  const fs::path dir = testing::scratch_dir("config_explicit");
  write(dir / "r.curb", "emit milieuSum > 0 ;\n");
  write(dir / "adj.txt", "1, 2\n0\n\n");
  const SystemSpec spec = parse_config(
      "[system]\nentities = 3\nstate_domain = bool\ntopology = explicit adj.txt\n"
      "[init]\nstates = 1,0,0\n[rules]\nfile = r.curb\n",
      dir);
  const auto& e = std::get<model::ExplicitTopology>(spec.topology.shape);
  EXPECT_EQ(e.adjacency, (std::vector<std::vector<std::size_t>>{{1, 2}, {0}, {}}));
}

TEST(Trace, FormatAndParse) {
  model::Trajectory t;
  t.first_iteration = 3;
  t.iterations = {{StateValue::boolean(true), StateValue::boolean(false)},
                  {StateValue::boolean(false), StateValue::boolean(false)}};
  const std::string text = format_trace(t);
  EXPECT_EQ(text, "t=3 states=1,0\nt=4 states=0,0\n");
  const auto lines = parse_trace(text);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], (TraceLine{4, {0, 0}}));
  EXPECT_EQ(error_code_of([] { parse_trace("t=x states=1\n"); }), ErrorCode::IoError);
}

TEST(Trace, EmptyTrajectoryIsNotWritten) {
  const fs::path dir = testing::scratch_dir("trace_empty");
  EXPECT_EQ(error_code_of([&] { write_trace({}, dir / "t.trace"); }), ErrorCode::Usage);
  EXPECT_FALSE(fs::exists(dir / "t.trace"));
}

TEST(Trace, Rule110TraceMatchesOracle) {
  const fs::path dir = testing::scratch_dir("trace_rule110");
  std::ostringstream out, err;
  ASSERT_EQ(run_command(data_path("rule110.conf"), {dir / "r.trace", std::nullopt}, out, err), 0) << err.str();
  const auto lines = parse_trace(read_text(dir / "r.trace"));
  ASSERT_EQ(lines.size(), 101u);
  std::vector<int> cells(64, 0);
  cells[32] = 1;
  const auto expected = testing::ElementaryCa(110).run(cells, 100);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    EXPECT_EQ(lines[t].iteration, t);
    EXPECT_EQ(std::vector<int>(lines[t].states.begin(), lines[t].states.end()), expected[t]);
  }
}

TEST(Commands, VocabularyViolationWritesNoTrace) {
  const fs::path dir = testing::scratch_dir("cmd_injection");
  write(dir / "bad.curb", "emit launchMissiles ;\n");
  write(dir / "bad.conf", "[system]\nentities = 4\nstate_domain = int 0 1\ntopology = ring 1\niterations = 5\n"
                          "[init]\nstates = impulse 0\n[rules]\nfile = bad.curb\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_command(dir / "bad.conf", {}, out, err), 3);
  EXPECT_NE(err.str().find("launchMissiles"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "bad.trace"));
}

TEST(Commands, RuntimeErrorExitCode) {
  const fs::path dir = testing::scratch_dir("cmd_runtime");
  write(dir / "div.curb", "emit 1 / milieu [ 0 ] ;\n");
  write(dir / "div.conf", "[system]\nentities = 4\nstate_domain = int 0 1\ntopology = ring 1\niterations = 5\n"
                          "[init]\nstates = 0,0,0,0\n[rules]\nfile = div.curb\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_command(dir / "div.conf", {}, out, err), 4);
  EXPECT_FALSE(fs::exists(dir / "div.trace"));
}

TEST(Commands, ScheduleProducesThreeRecords) {
  const fs::path dir = testing::scratch_dir("cmd_schedule");
  std::ostringstream out, err;
  ASSERT_EQ(run_command(data_path("rule110_adaptive.conf"), {dir / "a.trace", dir / "a.lineage"}, out, err), 0)
      << err.str();
  EXPECT_EQ(line_count(read_text(dir / "a.trace")), 41u);
  const std::string lineage = read_text(dir / "a.lineage");
  EXPECT_EQ(line_count(lineage), 3u);
  EXPECT_EQ(lineage.rfind("gen=1 parent=", 0), 0u);
}

TEST(Commands, LineageRecordsIterationOfEffect) {
  const SimulationResult r = simulate(load_config(data_path("rule110_adaptive.conf")));
  ASSERT_EQ(r.lineage.size(), 3u);
  EXPECT_EQ(r.lineage.records()[0].iteration, 10u);
  EXPECT_EQ(r.lineage.records()[2].iteration, 30u);
  EXPECT_EQ(r.lineage.records()[1].seed, event_seed(42, 2));
}

TEST(Commands, Validate) {
  std::ostringstream out, err;
  EXPECT_EQ(validate_command(data_path("rule110.curb"), "int 0 1", 2, out, err), 0);
  EXPECT_EQ(out.str().rfind("let identifier0 = ", 0), 0u);
  EXPECT_EQ(validate_command(data_path("rule110.curb"), "int 0 1", 1, out, err), 3);
  EXPECT_EQ(validate_command(data_path("injected.curb"), "bool", 2, out, err), 3);
  EXPECT_EQ(validate_command(data_path("rule110.curb"), "ternary", 2, out, err), 2);
  EXPECT_EQ(validate_command(data_path("missing.curb"), "bool", 2, out, err), 1);
}

TEST(Commands, AdaptWritesChildAndLineage) {
  const fs::path dir = testing::scratch_dir("cmd_adapt");
  std::ostringstream out, err;
  AdaptOptions options;
  options.events = 2;
  options.out = dir / "child.curb";
  options.lineage = dir / "child.lineage";
  ASSERT_EQ(adapt_command(data_path("rule110.conf"), options, out, err), 0) << err.str();
  EXPECT_NO_THROW(lang::compile(lang::RuleSource{read_text(dir / "child.curb")}, StateDomain::integer_range(0, 1), 2));
  EXPECT_EQ(line_count(read_text(dir / "child.lineage")), 2u);
}

TEST(Commands, TraceDiff) {
  const fs::path dir = testing::scratch_dir("cmd_diff");
  write(dir / "a", "t=0 states=0,1\nt=1 states=1,1\n");
  write(dir / "b", "t=0 states=0,1\nt=1 states=1,0\n");
  std::ostringstream out, err;
  EXPECT_EQ(trace_diff_command(dir / "a", dir / "a", out, err), 0);
  EXPECT_EQ(out.str(), "identical\n");
  out.str("");
  EXPECT_EQ(trace_diff_command(dir / "a", dir / "b", out, err), 1);
  EXPECT_NE(out.str().find("line 2"), std::string::npos);
  EXPECT_NE(out.str().find("t=1 states=1,0"), std::string::npos);
  EXPECT_EQ(trace_diff_command(dir / "a", dir / "nope", out, err), 2);
}

int cli(const std::string& args) {
  const int status = std::system((std::string(CURB_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = testing::scratch_dir("cli");
  const std::string data = data_path("").string();
  EXPECT_EQ(cli("run " + data + "rule110.conf --trace " + (dir / "r.trace").string()), 0);
  EXPECT_EQ(cli("run " + data + "rule110.conf --trace " + (dir / "r2.trace").string()), 0);
  EXPECT_EQ(cli("trace-diff " + (dir / "r.trace").string() + " " + (dir / "r2.trace").string()), 0);
  EXPECT_EQ(cli("validate " + data + "rule110.curb --domain int 0 1 --milieu 2"), 0);
  EXPECT_EQ(cli("validate " + data + "injected.curb --domain bool --milieu 2"), 3);
  EXPECT_EQ(cli("adapt " + data + "rule110.conf --events 1 --out " + (dir / "c.curb").string() + " --lineage " +
                (dir / "c.lineage").string()),
            0);
  EXPECT_EQ(cli("run " + data + "does_not_exist.conf"), 2);
  EXPECT_EQ(cli("frobnicate"), 1);
  EXPECT_EQ(cli(""), 1);
}

}  // namespace
}  // namespace curb::harness
