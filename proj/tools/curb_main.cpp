#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "curb/harness/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"curb: cellular rule systems over a restricted rule language"};
  app.require_subcommand(1);

  std::string config;
  std::string trace_path;
  std::string lineage_path;
  auto* run = app.add_subcommand("run", "simulate a configured system and write its trace");
  run->add_option("config", config, "configuration file")->required();
  run->add_option("--trace", trace_path, "trace output (default: <config>.trace)");
  run->add_option("--lineage", lineage_path, "lineage output (default: <config>.lineage)");

  std::string rule_file;
  std::vector<std::string> domain_words;
  std::size_t milieu = 0;
  auto* validate = app.add_subcommand("validate", "check a rule file and print its canonical form");
  validate->add_option("rulefile", rule_file, "rule source")->required();
  validate->add_option("--domain", domain_words, "`bool` or `int <lo> <hi>`")->required()->expected(1, 3);
  validate->add_option("--milieu", milieu, "milieu size")->required();

  std::size_t events = 1;
  std::string out_path;
  auto* adapt = app.add_subcommand("adapt", "apply adaptation events to a configured system's rules");
  adapt->add_option("config", config, "configuration file")->required();
  adapt->add_option("--events", events, "number of events")->required();
  adapt->add_option("--out", out_path, "adapted rule output (default: <config>.adapted.curb)");
  adapt->add_option("--lineage", lineage_path, "lineage output (default: <config>.lineage)");

  std::string trace_a;
  std::string trace_b;
  auto* diff = app.add_subcommand("trace-diff", "compare two trace files");
  diff->add_option("a", trace_a, "first trace")->required();
  diff->add_option("b", trace_b, "second trace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  namespace h = curb::harness;
  if (run->parsed()) {
    h::RunOptions options;
    if (!trace_path.empty()) options.trace = trace_path;
    if (!lineage_path.empty()) options.lineage = lineage_path;
    return h::run_command(config, options, std::cout, std::cerr);
  }
  if (validate->parsed()) {
    std::string domain;
    for (const auto& w : domain_words) domain += (domain.empty() ? "" : " ") + w;
    return h::validate_command(rule_file, domain, milieu, std::cout, std::cerr);
  }
  if (adapt->parsed()) {
    h::AdaptOptions options;
    options.events = events;
    if (!out_path.empty()) options.out = out_path;
    if (!lineage_path.empty()) options.lineage = lineage_path;
    return h::adapt_command(config, options, std::cout, std::cerr);
  }
  return h::trace_diff_command(trace_a, trace_b, std::cout, std::cerr);
}
