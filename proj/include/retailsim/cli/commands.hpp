#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "retailsim/scenario/config.hpp"

namespace retailsim::cli {

/// Process exit codes. Stable; documented in the README.
enum class ExitCode : int {
  ok = 0,
  violations = 1,         // scenario failed validation
  usage = 2,              // bad command line
  missing_input = 3,      // input file does not exist or cannot be read
  unwritable_output = 4,  // output directory/file cannot be written
  malformed_csv = 5,      // results file does not parse
  unknown_kpi = 6,        // report asked for a KPI that is not a column
  internal = 7,           // unexpected failure inside the simulator
};

/// Flag overrides applied on top of a loaded scenario.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> replications;
  std::optional<int> weeks;
  std::optional<int> warmup_weeks;
};

/// Where the scenario comes from: a file, or a built-in preset.
struct ScenarioSource {
  std::optional<std::filesystem::path> config;
  std::optional<scenario::Department> preset;
};

struct ValidateCommand {
  ScenarioSource source;
};

struct RunCommand {
  ScenarioSource source;
  std::filesystem::path output;
  Overrides overrides;
};

struct SweepTillsCommand {
  ScenarioSource source;
  std::filesystem::path output;
  Overrides overrides;
};

struct SweepExpertsCommand {
  ScenarioSource source;
  std::filesystem::path output;
  Overrides overrides;
};

struct ReportCommand {
  std::filesystem::path results;
  std::filesystem::path chart;
  std::string kpi = "service_level_index";
  std::string x_label = "arm value";
};

using Command = std::variant<ValidateCommand, RunCommand, SweepTillsCommand, SweepExpertsCommand,
                             ReportCommand>;

/// Runs one command. Human-readable progress goes to `out`, problems to `err`.
///
///  validate      prints every violation; exit 1 if there are any
///  run           <out>/replications.csv, summary.csv, weekly.csv, scenario.yaml
///  sweep-tills   <out>/sweep_tills.csv and sweep_tills_summary.csv
///  sweep-experts <out>/sweep_experts.csv and sweep_experts_summary.csv
///  report        SVG chart of one KPI against the swept value
ExitCode execute(const Command& command, std::ostream& out, std::ostream& err);

}  // namespace retailsim::cli
