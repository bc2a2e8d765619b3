// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Set SIM_THREADS to cap the sweep worker count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "oracles.hpp"
#include "retailsim/cli/commands.hpp"
#include "retailsim/scenario/experiment.hpp"
#include "retailsim/scenario/replication.hpp"

using namespace retailsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const auto root = fs::temp_directory_path() / "retailsim_acceptance_determinism";
  fs::remove_all(root);
  std::string detail;
  bool pass = true;
  for (auto d : {scenario::Department::audio_tv, scenario::Department::womenswear}) {
    std::vector<fs::path> dirs;
    for (int i = 0; i < 2; ++i) {
      cli::RunCommand cmd;
      cmd.source.preset = d;
      cmd.output = root / (std::string(scenario::preset_name(d)) + std::to_string(i));
      cmd.overrides.seed = 123456789;
      std::ostringstream out, err;
      if (cli::execute(cmd, out, err) != cli::ExitCode::ok) return {false, "run failed: " + err.str()};
      dirs.push_back(cmd.output);
    }
    for (const char* f : {"replications.csv", "summary.csv", "weekly.csv"}) {
      const auto a = slurp(dirs[0] / f);
      const auto b = slurp(dirs[1] / f);
      if (a.empty() || a != b) {
        pass = false;
        detail += std::string(scenario::preset_name(d)) + "/" + f + " differs; ";
      }
    }
    detail += std::string(scenario::preset_name(d)) + " " + std::to_string(slurp(dirs[0] / "replications.csv").size()) +
              " bytes identical; ";
  }
  fs::remove_all(root);
  return {pass, detail};
}

Outcome erlang_c() {
  scenario::ScenarioConfig c;
  c.schedule = {7, 24.0};  // open around the clock: a stationary M/M/2
  c.weeks = 10;
  c.warmup_weeks = 1;
  c.interarrival = des::Exponential{1.0};
  c.staffing = {.cashiers = 2};
  c.service.till = des::Exponential{0.7};
  c.customers.browse_time = des::Constant{0.0};
  c.customers.help_need_probability = des::Constant{0.0};
  c.customers.purchase_probability = des::Constant{1.0};
  c.customers.till_patience = des::Constant{kNever};
  c.customers.help_patience = des::Constant{kNever};
  std::vector<double> waits;
  for (int rep = 0; rep < c.replications; ++rep) waits.push_back(scenario::run_replication(c, rep).mean_till_wait);
  const double exact = oracle::mmc_mean_wait(1.0, 0.7, 2);
  const double sim = oracle::mean(waits);
  const double rel = std::abs(sim / exact - 1.0);
  return {rel < 0.05, "simulated " + fmt(sim) + " vs Erlang-C " + fmt(exact) + " (" + fmt(100 * rel, 2) +
                          "% off, mean of " + std::to_string(waits.size()) + " replications)"};
}

struct TillsSummary {
  int argmax = 0;
  std::vector<double> mean, sd;
};

TillsSummary summarize(const scenario::ExperimentResult& r) {
  TillsSummary s;
  for (const auto& arm : r.arms) {
    const auto st = arm.stats("service_level_index");
    s.mean.push_back(st.mean);
    s.sd.push_back(st.stddev);
  }
  const auto best = std::max_element(s.mean.begin(), s.mean.end()) - s.mean.begin();
  s.argmax = r.arms[static_cast<std::size_t>(best)].value;
  return s;
}

Outcome curvilinear(const TillsSummary& atv, const TillsSummary& ww, int reps) {
  bool pass = true;
  std::string detail;
  auto check = [&](const char* name, const TillsSummary& s) {
    const std::size_t peak = static_cast<std::size_t>(s.argmax - 1);
    const bool interior = s.argmax >= 2 && s.argmax <= 8;
    const double n = reps;
    double worst_margin = 1e300;
    for (std::size_t end : {std::size_t{0}, s.mean.size() - 1}) {
      // standard error of the difference between the peak arm and the endpoint
      const double se = std::sqrt(s.sd[peak] * s.sd[peak] / n + s.sd[end] * s.sd[end] / n);
      worst_margin = std::min(worst_margin, (s.mean[peak] - s.mean[end]) / se);
    }
    pass &= interior && worst_margin > 1.0;
    detail += std::string(name) + ": peak at " + std::to_string(s.argmax) + " cashiers, index " + fmt(s.mean[peak]) +
              " vs ends " + fmt(s.mean.front()) + "/" + fmt(s.mean.back()) + ", min gap " + fmt(worst_margin, 1) +
              " SE; ";
  };
  check("atv", atv);
  check("ww", ww);
  return {pass, detail};
}

Outcome peak_order(const TillsSummary& atv, const TillsSummary& ww) {
  return {atv.argmax <= ww.argmax,
          "atv peak " + std::to_string(atv.argmax) + " <= ww peak " + std::to_string(ww.argmax)};
}

Outcome expert_subtlety(int reps) {
  const auto base = scenario::department_preset(scenario::Department::audio_tv);
  const auto r = scenario::run_experiment_experts(base, reps);
  std::vector<double> x, means, vars;
  for (const auto& arm : r.arms) {
    const auto st = arm.stats("service_level_index");
    x.push_back(arm.value);
    means.push_back(st.mean);
    vars.push_back(st.stddev * st.stddev);
  }
  const double slope = oracle::ols_slope(x, means);
  const double pooled = std::sqrt(oracle::mean(vars));
  const double gap = *std::max_element(means.begin(), means.end()) - *std::min_element(means.begin(), means.end());
  std::string series;
  for (double m : means) series += fmt(m) + " ";
  return {slope >= 0.0 && gap < 0.5 * pooled, "means " + series + "slope " + fmt(slope, 6) + ", max gap " +
                                                  fmt(gap, 5) + " = " + fmt(gap / pooled, 3) + " pooled SD"};
}

Outcome invariant_suite() {
  const auto s = invariants::run_suite(100);
  const bool pass = s.configs == 100 && s.conservation_ok() && s.edges_ok() && s.index_ok() && s.fifo_breaks == 0 &&
                    s.renege_ok();
  std::string detail = std::to_string(s.configs) + " configs, " + std::to_string(s.customers) + " customers, " +
                       std::to_string(s.transitions) + " transitions; conservation " +
                       (s.conservation_ok() ? "ok" : "BROKEN") + ", edges " + (s.edges_ok() ? "ok" : "BROKEN") +
                       ", index scaling " + (s.index_ok() ? "ok" : "BROKEN") + ", served patient/impatient " +
                       std::to_string(s.served_long) + "/" + std::to_string(s.served_short) + " (" +
                       std::to_string(s.renege_violations) + " of " + std::to_string(s.renege_pairs) +
                       " pairs reversed)";
  for (const auto& m : s.messages) detail += "\n      " + m;
  return {pass, detail};
}

}  // namespace

int main() {
  constexpr int reps = 20;
  int failures = 0;
  auto report = [&](const char* name, const std::function<Outcome()>& criterion) {
    const auto start = std::chrono::steady_clock::now();
    const auto o = criterion();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  };

  report("1 determinism", determinism);
  report("2 erlang-c", erlang_c);

  TillsSummary atv, ww;
  report("3 curvilinear staffing", [&] {
    atv = summarize(scenario::run_experiment_tills(scenario::department_preset(scenario::Department::audio_tv), reps));
    ww = summarize(scenario::run_experiment_tills(scenario::department_preset(scenario::Department::womenswear), reps));
    return curvilinear(atv, ww, reps);
  });
  report("4 department peak order", [&] { return peak_order(atv, ww); });
  report("5 expert subtlety", [&] { return expert_subtlety(reps); });
  report("6 invariant suite", invariant_suite);

  std::printf("%d of 6 criteria passed\n", 6 - failures);
  return failures == 0 ? 0 : 1;
}
