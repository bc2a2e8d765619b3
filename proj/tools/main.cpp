// Command-line front end: validate, run, sweep-tills, sweep-experts, report.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "retailsim/cli/commands.hpp"

namespace cli = retailsim::cli;
namespace scenario = retailsim::scenario;

namespace {

struct SourceFlags {
  std::string config;
  std::string preset;
};

void add_source(CLI::App* app, SourceFlags& flags) {
  auto* config = app->add_option("--config", flags.config, "Scenario YAML file");
  auto* preset = app->add_option("--preset", flags.preset, "Built-in department preset")
                     ->check(CLI::IsMember({"atv", "ww"}));
  config->excludes(preset);
  preset->excludes(config);
}

void add_overrides(CLI::App* app, cli::Overrides& o) {
  app->add_option("--seed", o.seed, "Base random seed");
  app->add_option("--replications", o.replications, "Replications per arm")->check(CLI::PositiveNumber);
  app->add_option("--weeks", o.weeks, "Simulated weeks")->check(CLI::PositiveNumber);
  app->add_option("--warmup-weeks", o.warmup_weeks, "Weeks excluded from statistics")
      ->check(CLI::NonNegativeNumber);
}

cli::ScenarioSource source_of(const SourceFlags& flags) {
  cli::ScenarioSource s;
  if (!flags.config.empty()) s.config = flags.config;
  if (!flags.preset.empty()) s.preset = scenario::parse_department(flags.preset);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retail department floor simulator"};
  app.require_subcommand(1);

  SourceFlags validate_src, run_src, tills_src, experts_src;
  cli::RunCommand run;
  cli::SweepTillsCommand tills;
  cli::SweepExpertsCommand experts;
  cli::ReportCommand report;
  std::string run_out = "results", tills_out = "results", experts_out = "results";
  std::string report_in, report_out = "chart.svg";

  auto* v = app.add_subcommand("validate", "Check a scenario and list every violation");
  add_source(v, validate_src);

  auto* r = app.add_subcommand("run", "Run the replications of one scenario");
  add_source(r, run_src);
  add_overrides(r, run.overrides);
  r->add_option("--output", run_out, "Output directory");

  auto* t = app.add_subcommand("sweep-tills", "Cashier count sweep (1..9 of 10 service staff)");
  add_source(t, tills_src);
  add_overrides(t, tills.overrides);
  t->add_option("--output", tills_out, "Output directory");

  auto* e = app.add_subcommand("sweep-experts", "Expert seller sweep (0..4)");
  add_source(e, experts_src);
  add_overrides(e, experts.overrides);
  e->add_option("--output", experts_out, "Output directory");

  auto* p = app.add_subcommand("report", "Chart one KPI of a results file as SVG");
  p->add_option("--input", report_in, "Per-replication results CSV")->required();
  p->add_option("--output", report_out, "SVG file to write");
  p->add_option("--kpi", report.kpi, "KPI column to chart");
  p->add_option("--x-label", report.x_label, "Horizontal axis label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : static_cast<int>(cli::ExitCode::usage);
  }

  try {
    cli::Command command;
    if (*v) {
      command = cli::ValidateCommand{source_of(validate_src)};
    } else if (*r) {
      run.source = source_of(run_src);
      run.output = run_out;
      command = run;
    } else if (*t) {
      tills.source = source_of(tills_src);
      tills.output = tills_out;
      command = tills;
    } else if (*e) {
      experts.source = source_of(experts_src);
      experts.output = experts_out;
      command = experts;
    } else {
      report.results = report_in;
      report.chart = report_out;
      command = report;
    }
    return static_cast<int>(cli::execute(command, std::cout, std::cerr));
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return static_cast<int>(cli::ExitCode::internal);
  }
}
