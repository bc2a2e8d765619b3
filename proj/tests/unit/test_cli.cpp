#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "retailsim/cli/chart.hpp"
#include "retailsim/cli/commands.hpp"
#include "retailsim/cli/results_csv.hpp"
#include "retailsim/scenario/experiment.hpp"

using namespace retailsim;
using namespace retailsim::cli;
namespace fs = std::filesystem;

namespace {

scenario::ScenarioConfig tiny(scenario::Department d) {
  auto c = scenario::department_preset(d);
  c.weeks = 2;
  c.warmup_weeks = 1;
  return c;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("retailsim_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("results csv round trip") {
  const auto result = scenario::run_experiment_tills(tiny(scenario::Department::audio_tv), 2, 1);
  std::stringstream buf;
  write_results_csv(buf, result);
  const auto table = read_results_csv(buf);
  CHECK(table.header == results_header());
  REQUIRE(table.rows.size() == 18);
  const int col = table.column("service_level_index");
  REQUIRE(col >= 0);
  CHECK(table.rows[3][0] == 2.0);  // arm 2, replication 1
  CHECK(table.rows[3][1] == 1.0);
  CHECK(table.rows[3][static_cast<std::size_t>(col)] ==
        doctest::Approx(result.arms[1].reports[1].service_level_index).epsilon(1e-6));
  CHECK(table.column("nope") == -1);
}

TEST_CASE("malformed csv is rejected") {
  const auto header = [] {
    std::string h;
    for (const auto& c : results_header()) h += (h.empty() ? "" : ",") + c;
    return h;
  }();
  std::istringstream wrong_header("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(read_results_csv(wrong_header), CsvError);
  std::istringstream ragged(header + "\n1,0,5\n");
  CHECK_THROWS_AS(read_results_csv(ragged), CsvError);
  std::string row = "1,0";
  for (std::size_t i = 0; i < metrics::kKpiColumns.size(); ++i) row += i == 3 ? ",abc" : ",1";
  std::istringstream text(header + "\n" + row + "\n");
  CHECK_THROWS_AS(read_results_csv(text), CsvError);
}

TEST_CASE("chart series, argmax and deterministic svg") {
  ResultsTable t;
  t.header = results_header();
  const int col = t.column("service_level_index");
  auto row = [&](double arm, double rep, double v) {
    std::vector<double> r(t.header.size(), 0.0);
    r[0] = arm;
    r[1] = rep;
    r[static_cast<std::size_t>(col)] = v;
    t.rows.push_back(r);
  };
  row(3, 0, 1.0);
  row(3, 1, 3.0);
  row(1, 0, 0.5);
  row(1, 1, 0.5);
  row(2, 0, 4.0);
  row(2, 1, 4.0);
  const auto s = chart_series(t, "service_level_index");
  REQUIRE(s.size() == 3);
  CHECK(s[0].x == 1.0);
  CHECK(s[2].mean == doctest::Approx(2.0));
  CHECK(s[2].stddev == doctest::Approx(std::sqrt(2.0)));
  CHECK(argmax(s) == 1);
  const auto svg = render_chart_svg(s, "service_level_index", "cashiers");
  CHECK(svg == render_chart_svg(s, "service_level_index", "cashiers"));
  CHECK(svg.find("data-argmax=\"2.000000\"") != std::string::npos);
  CHECK_THROWS_AS(chart_series(t, "happiness"), UnknownKpiError);
  CHECK_THROWS_AS(chart_series(t, "arm_value"), UnknownKpiError);
}

TEST_CASE("single-arm chart") {
  std::vector<ChartPoint> one{{4.0, 1.5, 0.0}};
  CHECK(argmax(one) == 0);
  const auto svg = render_chart_svg(one, "transactions", "cashiers");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("data-argmax=\"4.000000\"") != std::string::npos);
}

TEST_CASE("sweep-tills writes 9 arms x 20 replications") {
  const auto dir = scratch("sweep");
  SweepTillsCommand cmd;
  cmd.source.preset = scenario::Department::audio_tv;
  cmd.output = dir;
  cmd.overrides.weeks = 2;
  std::ostringstream out, err;
  REQUIRE(execute(cmd, out, err) == ExitCode::ok);
  std::istringstream csv(slurp(dir / "sweep_tills.csv"));
  const auto table = read_results_csv(csv);
  CHECK(table.rows.size() == 180);
  CHECK(fs::exists(dir / "sweep_tills_summary.csv"));

  ReportCommand report{dir / "sweep_tills.csv", dir / "chart.svg"};
  REQUIRE(execute(report, out, err) == ExitCode::ok);
  const auto series = chart_series(table, "service_level_index");
  const auto svg = slurp(dir / "chart.svg");
  CHECK(svg.find("data-argmax=\"" + format_number(series[argmax(series)].x) + "\"") != std::string::npos);
  REQUIRE(execute(report, out, err) == ExitCode::ok);
  CHECK(slurp(dir / "chart.svg") == svg);
  fs::remove_all(dir);
}

TEST_CASE("run command writes its outputs deterministically") {
  const auto a = scratch("run_a");
  const auto b = scratch("run_b");
  std::ostringstream out, err;
  for (const auto& dir : {a, b}) {
    RunCommand cmd;
    cmd.source.preset = scenario::Department::womenswear;
    cmd.output = dir;
    cmd.overrides = {.seed = 5, .replications = 2, .weeks = 2, .warmup_weeks = 1};
    REQUIRE(execute(cmd, out, err) == ExitCode::ok);
  }
  for (const char* f : {"replications.csv", "summary.csv", "weekly.csv", "scenario.yaml"}) {
    CHECK(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  // The echoed scenario is itself a valid input.
  ValidateCommand v;
  v.source.config = a / "scenario.yaml";
  CHECK(execute(v, out, err) == ExitCode::ok);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("exit codes") {
  std::ostringstream out, err;
  CHECK(execute(ValidateCommand{}, out, err) == ExitCode::usage);

  ValidateCommand missing;
  missing.source.config = "/definitely/not/here.yaml";
  CHECK(execute(missing, out, err) == ExitCode::missing_input);

  const auto dir = scratch("codes");
  fs::create_directories(dir);
  {
    std::ofstream bad(dir / "bad.yaml");
    bad << "preset: atv\nstaffing: {cashiers: -1}\n";
  }
  ValidateCommand invalid;
  invalid.source.config = dir / "bad.yaml";
  err.str("");
  CHECK(execute(invalid, out, err) == ExitCode::violations);
  CHECK(err.str().find("staffing.cashiers") != std::string::npos);

  {
    std::ofstream blocker(dir / "file");
    blocker << "x";
  }
  RunCommand unwritable;
  unwritable.source.preset = scenario::Department::audio_tv;
  unwritable.output = dir / "file" / "sub";
  unwritable.overrides.weeks = 2;
  CHECK(execute(unwritable, out, err) == ExitCode::unwritable_output);

  {
    std::ofstream garbage(dir / "garbage.csv");
    garbage << "hello,world\n1,2\n";
  }
  CHECK(execute(ReportCommand{dir / "garbage.csv", dir / "c.svg"}, out, err) == ExitCode::malformed_csv);
  CHECK(execute(ReportCommand{dir / "none.csv", dir / "c.svg"}, out, err) == ExitCode::missing_input);

  const auto result = scenario::run_experiment_experts(tiny(scenario::Department::audio_tv), 1, 1);
  {
    std::ofstream good(dir / "good.csv");
    write_results_csv(good, result);
  }
  ReportCommand unknown{dir / "good.csv", dir / "c.svg", "happiness"};
  CHECK(execute(unknown, out, err) == ExitCode::unknown_kpi);
  fs::remove_all(dir);
}
