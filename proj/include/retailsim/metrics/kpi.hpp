#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "retailsim/agents/customer.hpp"
#include "retailsim/agents/roles.hpp"
#include "retailsim/metrics/satisfaction.hpp"

namespace retailsim::metrics {

struct WeeklyKpi {
  std::uint64_t customers_arrived = 0;
  std::uint64_t transactions = 0;
  std::uint64_t abandoned_help = 0;
  std::uint64_t abandoned_till = 0;
  double service_level_index = 0.0;
  double mean_till_wait = 0.0;

  bool operator==(const WeeklyKpi&) const = default;
};

struct KpiReport {
  std::uint64_t customers_arrived = 0;
  std::uint64_t customers_served = 0;  // received at least one service
  std::uint64_t transactions = 0;
  std::uint64_t left_without_purchase = 0;
  std::uint64_t abandoned_help = 0;
  std::uint64_t abandoned_till = 0;
  std::uint64_t customers_in_system = 0;  // still inside when the run ended

  double service_level_index = 0.0;
  double help_index = 0.0;
  double till_index = 0.0;

  double mean_help_wait = 0.0;
  double p95_help_wait = 0.0;
  double mean_till_wait = 0.0;
  double p95_till_wait = 0.0;

  std::array<double, 4> utilization{};  // indexed by StaffRole

  std::vector<WeeklyKpi> weekly;  // every simulated week, warm-up included

  [[nodiscard]] double utilization_of(StaffRole role) const {
    return utilization[static_cast<std::size_t>(role)];
  }

  bool operator==(const KpiReport&) const = default;
};

/// What a finished replication hands to the report builder.
struct CustomerRecord {
  AgentId id = 0;
  SimTime entry = 0.0;
  std::optional<agents::DepartureOutcome> outcome;
  std::uint32_t services_received = 0;
};

struct WaitRecord {
  AgentId customer = 0;
  RequestKind kind = RequestKind::till;
  double wait = 0.0;
};

struct StaffRecord {
  StaffRole role = StaffRole::cashier;
  double busy_minutes = 0.0;  // service time spent on counted customers
};

struct ReplicationTrace {
  std::vector<CustomerRecord> customers;  // indexed by customer id
  std::vector<WaitRecord> waits;          // enqueue -> assignment, one per service start
  std::vector<StaffRecord> staff;
  double staffed_minutes = 0.0;  // shop open or occupied, counted days only
};

struct ReportSettings {
  SatisfactionWeights weights = SatisfactionWeights::defaults();
  int weeks = 10;
  int warmup_weeks = 1;
};

/// Week (0-based) containing simulated time t.
int week_of(SimTime t);

/// Builds the KPI report. Customers arriving during warm-up weeks are left out
/// of every aggregate except the weekly series.
KpiReport finalize_report(const Ledger& ledger, const ReplicationTrace& trace,
                          const ReportSettings& settings);

/// Nearest-rank percentile of `values` (q in [0,1]); 0 for an empty input.
double percentile(std::vector<double> values, double q);

/// Per-replication CSV columns after arm_value and replication.
inline constexpr std::array<std::string_view, 13> kKpiColumns = {
    "transactions",   "service_level_index", "help_index",       "till_index",
    "mean_help_wait", "mean_till_wait",      "p95_till_wait",    "abandoned_help",
    "abandoned_till", "util_cashier",        "util_seller_normal", "util_seller_expert",
    "util_manager"};

/// Value of a named KPI column, or nullopt for an unknown name.
std::optional<double> kpi_value(const KpiReport& report, std::string_view name);

}  // namespace retailsim::metrics
