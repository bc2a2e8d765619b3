#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/agents/customer.hpp"
#include "retailsim/agents/staff.hpp"
#include "retailsim/metrics/satisfaction.hpp"
#include "retailsim/queuing/service_queue.hpp"

namespace retailsim::scenario {

/// Shop opening hours. Day d of week w opens at w*7 days + d days and stays
/// open for hours_per_day hours.
struct OpeningSchedule {
  int days_per_week = 6;
  double hours_per_day = 9.0;

  bool operator==(const OpeningSchedule&) const = default;
};

struct StaffingMix {
  int cashiers = 0;
  int sellers_normal = 0;
  int sellers_expert = 0;
  int section_managers = 0;
  std::optional<int> tills;  // open tills; defaults to the cashier count

  [[nodiscard]] int count(StaffRole role) const;
  /// Service staff (cashiers and sellers). Section managers are not counted.
  [[nodiscard]] int service_staff() const { return cashiers + sellers_normal + sellers_expert; }
  [[nodiscard]] int total() const { return service_staff() + section_managers; }
  [[nodiscard]] int open_tills() const { return tills.value_or(cashiers); }

  bool operator==(const StaffingMix&) const = default;
};

enum class Department : std::uint8_t { audio_tv, womenswear };

std::string_view preset_name(Department department);  // "atv" / "ww"
std::optional<Department> parse_department(std::string_view name);

struct ScenarioConfig {
  std::string preset;  // informational; empty for hand-built configs
  OpeningSchedule schedule;
  int weeks = 10;
  int warmup_weeks = 1;
  des::Distribution interarrival = des::Exponential{0.25};
  StaffingMix staffing;
  agents::ServiceTimes service;
  agents::PopulationParams customers;
  metrics::SatisfactionWeights weights = metrics::SatisfactionWeights::defaults();
  queuing::QueueRule queue_rule = queuing::QueueRule::fifo;
  std::uint64_t seed = 20070715;
  int replications = 20;
};

/// Built-in department calibration. Values are placeholders that encode
/// "A&TV: more advice, longer services, fewer customers" versus "WW: more
/// customers, quicker services"; they are not fitted to real data.
ScenarioConfig department_preset(Department department);

/// Every violation found, each naming the offending field. Empty when valid.
std::vector<std::string> validate(const ScenarioConfig& config);

/// Thrown by loaders when a config is rejected; carries all violations.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> violations);
  [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

}  // namespace retailsim::scenario
