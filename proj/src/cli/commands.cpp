#include "retailsim/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "retailsim/cli/chart.hpp"
#include "retailsim/cli/results_csv.hpp"
#include "retailsim/scenario/config_io.hpp"
#include "retailsim/scenario/experiment.hpp"
#include "retailsim/scenario/replication.hpp"

namespace retailsim::cli {

namespace fs = std::filesystem;

namespace {

/// Early exit carrying an exit code and a message.
struct Failure {
  ExitCode code;
  std::string message;
};

scenario::ScenarioConfig load(const ScenarioSource& source) {
  if (source.config) {
    std::error_code ec;
    if (!fs::is_regular_file(*source.config, ec)) {
      throw Failure{ExitCode::missing_input, "scenario file not found: " + source.config->string()};
    }
    try {
      return scenario::load_config(*source.config);
    } catch (const scenario::ConfigError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw Failure{ExitCode::missing_input, e.what()};
    }
  }
  if (source.preset) return scenario::department_preset(*source.preset);
  throw Failure{ExitCode::usage, "either --config or --preset is required"};
}

scenario::ScenarioConfig load(const ScenarioSource& source, const Overrides& o) {
  auto c = load(source);
  if (o.seed) c.seed = *o.seed;
  if (o.replications) c.replications = *o.replications;
  if (o.weeks) c.weeks = *o.weeks;
  if (o.warmup_weeks) c.warmup_weeks = *o.warmup_weeks;
  if (auto v = scenario::validate(c); !v.empty()) throw scenario::ConfigError(std::move(v));
  return c;
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Failure{ExitCode::unwritable_output, "cannot create output directory " + dir.string()};
  }
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ostringstream buffer;
  writer(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{ExitCode::unwritable_output, "cannot write " + path.string()};
  file << buffer.str();
  file.flush();
  if (!file) throw Failure{ExitCode::unwritable_output, "write failed: " + path.string()};
}

ExitCode run_validate(const ValidateCommand& cmd, std::ostream& out) {
  load(cmd.source);
  out << "ok: scenario is valid\n";
  return ExitCode::ok;
}

ExitCode run_single(const RunCommand& cmd, std::ostream& out) {
  const auto config = load(cmd.source, cmd.overrides);
  prepare_dir(cmd.output);

  // A single scenario is written as one arm keyed by its cashier count.
  scenario::ExperimentResult result;
  result.parameter = scenario::SweepParameter::cashiers;
  auto& arm = result.arms.emplace_back();
  arm.value = config.staffing.cashiers;
  arm.config = config;
  for (int rep = 0; rep < config.replications; ++rep) {
    arm.reports.push_back(scenario::run_replication(config, rep));
  }

  write_file(cmd.output / "replications.csv", [&](std::ostream& o) { write_results_csv(o, result); });
  write_file(cmd.output / "summary.csv", [&](std::ostream& o) { write_summary_csv(o, result); });
  write_file(cmd.output / "weekly.csv",
             [&](std::ostream& o) { write_weekly_csv(o, result.arms.front().reports); });
  write_file(cmd.output / "scenario.yaml", [&](std::ostream& o) { o << scenario::to_yaml(config); });

  const auto idx = result.arms.front().stats("service_level_index");
  const auto tx = result.arms.front().stats("transactions");
  out << "ran " << config.replications << " replication(s): service_level_index " << format_number(idx.mean)
      << " (sd " << format_number(idx.stddev) << "), transactions " << format_number(tx.mean) << "\n";
  return ExitCode::ok;
}

ExitCode run_sweep(const ScenarioSource& source, const Overrides& overrides, const fs::path& output,
                   scenario::SweepParameter parameter, std::ostream& out) {
  const auto config = load(source, overrides);
  prepare_dir(output);
  const auto result = parameter == scenario::SweepParameter::cashiers
                          ? scenario::run_experiment_tills(config, config.replications)
                          : scenario::run_experiment_experts(config, config.replications);
  const std::string stem = parameter == scenario::SweepParameter::cashiers ? "sweep_tills" : "sweep_experts";
  write_file(output / (stem + ".csv"), [&](std::ostream& o) { write_results_csv(o, result); });
  write_file(output / (stem + "_summary.csv"), [&](std::ostream& o) { write_summary_csv(o, result); });

  out << stem << ": " << result.arms.size() << " arms x " << config.replications << " replications\n";
  for (const auto& arm : result.arms) {
    const auto s = arm.stats("service_level_index");
    out << "  " << scenario::to_string(parameter) << '=' << arm.value << "  index " << format_number(s.mean)
        << " (sd " << format_number(s.stddev) << ")\n";
  }
  return ExitCode::ok;
}

ExitCode run_report(const ReportCommand& cmd, std::ostream& out) {
  std::ifstream in(cmd.results, std::ios::binary);
  if (!in) throw Failure{ExitCode::missing_input, "cannot read results file " + cmd.results.string()};
  ResultsTable table;
  try {
    table = read_results_csv(in);
  } catch (const CsvError& e) {
    throw Failure{ExitCode::malformed_csv, std::string("malformed results file: ") + e.what()};
  }
  if (table.rows.empty()) throw Failure{ExitCode::malformed_csv, "results file has no rows"};
  std::vector<ChartPoint> series;
  try {
    series = chart_series(table, cmd.kpi);
  } catch (const UnknownKpiError& e) {
    throw Failure{ExitCode::unknown_kpi, e.what()};
  }
  if (cmd.chart.has_parent_path()) prepare_dir(cmd.chart.parent_path());
  write_file(cmd.chart, [&](std::ostream& o) { o << render_chart_svg(series, cmd.kpi, cmd.x_label); });
  out << "wrote " << cmd.chart.string() << " (peak at " << format_number(series[argmax(series)].x) << ")\n";
  return ExitCode::ok;
}

}  // namespace

ExitCode execute(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& cmd) -> ExitCode {
          using T = std::decay_t<decltype(cmd)>;
          if constexpr (std::is_same_v<T, ValidateCommand>) return run_validate(cmd, out);
          else if constexpr (std::is_same_v<T, RunCommand>) return run_single(cmd, out);
          else if constexpr (std::is_same_v<T, SweepTillsCommand>)
            return run_sweep(cmd.source, cmd.overrides, cmd.output, scenario::SweepParameter::cashiers, out);
          else if constexpr (std::is_same_v<T, SweepExpertsCommand>)
            return run_sweep(cmd.source, cmd.overrides, cmd.output, scenario::SweepParameter::experts, out);
          else return run_report(cmd, out);
        },
        command);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const scenario::ConfigError& e) {
    for (const auto& v : e.violations()) err << v << '\n';
    return ExitCode::violations;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal;
  }
}

}  // namespace retailsim::cli
