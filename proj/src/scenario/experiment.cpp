#include "retailsim/scenario/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "retailsim/des/rng.hpp"
#include "retailsim/scenario/replication.hpp"

namespace retailsim::scenario {

std::string_view to_string(SweepParameter parameter) {
  return parameter == SweepParameter::cashiers ? "cashiers" : "experts";
}

KpiStats ArmResult::stats(std::string_view kpi) const {
  std::vector<double> values;
  values.reserve(reports.size());
  for (const auto& r : reports) {
    auto v = metrics::kpi_value(r, kpi);
    if (!v) throw std::invalid_argument("unknown KPI '" + std::string(kpi) + "'");
    values.push_back(*v);
  }
  KpiStats s;
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::size_t ExperimentResult::report_count() const {
  std::size_t n = 0;
  for (const auto& a : arms) n += a.reports.size();
  return n;
}

ScenarioConfig arm_config(const ScenarioConfig& base, SweepParameter parameter, int value) {
  ScenarioConfig c = base;
  auto& s = c.staffing;
  s.tills.reset();
  if (parameter == SweepParameter::cashiers) {
    const int sellers = kServiceStaff - value;
    s.cashiers = value;
    s.sellers_expert = std::clamp(base.staffing.sellers_expert, 0, std::max(sellers, 0));
    s.sellers_normal = sellers - s.sellers_expert;
  } else {
    s.sellers_expert = value;
    s.sellers_normal = kServiceStaff - s.cashiers - value;
  }
  return c;
}

unsigned default_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SIM_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

ExperimentResult run_sweep(const SweepSpec& spec, unsigned threads) {
  ExperimentResult result;
  result.parameter = spec.parameter;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    ArmResult arm;
    arm.value = spec.values[i];
    arm.config = arm_config(spec.base, spec.parameter, arm.value);
    if (!spec.common_random_numbers) {
      arm.config.seed = des::mix64(spec.base.seed ^ des::mix64(0xA5A5'0000ull + i));
    }
    if (auto violations = validate(arm.config); !violations.empty()) {
      throw ConfigError(std::move(violations));
    }
    arm.reports.resize(static_cast<std::size_t>(std::max(spec.replications, 0)));
    result.arms.push_back(std::move(arm));
  }

  const std::size_t reps = static_cast<std::size_t>(std::max(spec.replications, 0));
  const std::size_t jobs = result.arms.size() * reps;
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      auto& arm = result.arms[job / reps];
      try {
        arm.reports[job % reps] = run_replication(arm.config, static_cast<int>(job % reps));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

ExperimentResult run_experiment_tills(const ScenarioConfig& preset, int replications,
                                      unsigned threads) {
  SweepSpec spec{preset, SweepParameter::cashiers, {1, 2, 3, 4, 5, 6, 7, 8, 9}, replications, true};
  return run_sweep(spec, threads);
}

ExperimentResult run_experiment_experts(const ScenarioConfig& preset, int replications,
                                        unsigned threads) {
  SweepSpec spec{preset, SweepParameter::experts, {0, 1, 2, 3, 4}, replications, true};
  return run_sweep(spec, threads);
}

}  // namespace retailsim::scenario
