#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "retailsim/metrics/kpi.hpp"
#include "retailsim/scenario/config.hpp"

namespace retailsim::scenario {

enum class SweepParameter : std::uint8_t { cashiers, experts };

std::string_view to_string(SweepParameter parameter);

/// Service staff held constant across both experiments.
inline constexpr int kServiceStaff = 10;

struct SweepSpec {
  ScenarioConfig base;
  SweepParameter parameter = SweepParameter::cashiers;
  std::vector<int> values;
  int replications = 20;
  bool common_random_numbers = true;
};

struct KpiStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single replication
};

struct ArmResult {
  int value = 0;
  ScenarioConfig config;
  std::vector<metrics::KpiReport> reports;  // by replication index

  /// Mean and standard deviation of a named KPI over the replications.
  [[nodiscard]] KpiStats stats(std::string_view kpi) const;
};

struct ExperimentResult {
  SweepParameter parameter = SweepParameter::cashiers;
  std::vector<ArmResult> arms;

  [[nodiscard]] std::size_t report_count() const;
};

/// Config of one arm.
///  cashiers = v: sellers = 10 - v, experts = min(base experts, sellers), the
///                rest normal sellers.
///  experts  = v: cashiers from base, normal sellers = 10 - cashiers - v.
/// Section managers are carried over unchanged and are not part of the 10.
ScenarioConfig arm_config(const ScenarioConfig& base, SweepParameter parameter, int value);

/// Runs every (arm, replication) pair, on up to `threads` workers (0 = use
/// SIM_THREADS or the hardware concurrency). Results are independent of the
/// thread count. With common random numbers every arm uses the same seeds.
ExperimentResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Till staffing sweep: cashiers 1..9.
ExperimentResult run_experiment_tills(const ScenarioConfig& preset, int replications,
                                      unsigned threads = 0);

/// Expert availability sweep: experts 0..4.
ExperimentResult run_experiment_experts(const ScenarioConfig& preset, int replications,
                                        unsigned threads = 0);

/// Worker count honouring the SIM_THREADS cap.
unsigned default_threads();

}  // namespace retailsim::scenario
