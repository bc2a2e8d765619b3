#include "retailsim/metrics/kpi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace retailsim::metrics {

int week_of(SimTime t) { return static_cast<int>(std::floor(t / kMinutesPerWeek)); }

double percentile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

KpiReport finalize_report(const Ledger& ledger, const ReplicationTrace& trace,
                          const ReportSettings& settings) {
  KpiReport r;
  const auto weeks = static_cast<std::size_t>(std::max(settings.weeks, 0));
  r.weekly.resize(weeks);

  auto counted = [&](AgentId id) { return week_of(trace.customers[id].entry) >= settings.warmup_weeks; };
  auto week_slot = [&](AgentId id) -> WeeklyKpi* {
    const int w = week_of(trace.customers[id].entry);
    return w >= 0 && static_cast<std::size_t>(w) < weeks ? &r.weekly[w] : nullptr;
  };

  for (const auto& c : trace.customers) {
    WeeklyKpi* wk = week_slot(c.id);
    if (wk) ++wk->customers_arrived;
    if (!c.outcome) {
      ++r.customers_in_system;
      continue;
    }
    const bool bought = *c.outcome == agents::DepartureOutcome::purchased;
    const bool help_gone = *c.outcome == agents::DepartureOutcome::abandoned_help_queue;
    const bool till_gone = *c.outcome == agents::DepartureOutcome::abandoned_till_queue;
    if (wk) {
      wk->transactions += bought;
      wk->abandoned_help += help_gone;
      wk->abandoned_till += till_gone;
    }
    if (!counted(c.id)) continue;
    ++r.customers_arrived;
    r.transactions += bought;
    r.abandoned_help += help_gone;
    r.abandoned_till += till_gone;
    r.left_without_purchase += *c.outcome == agents::DepartureOutcome::left_without_purchase;
    r.customers_served += c.services_received > 0;
  }
  // Customers still inside at the end count as arrivals too.
  for (const auto& c : trace.customers) {
    if (!c.outcome && counted(c.id)) ++r.customers_arrived;
  }

  std::vector<SatisfactionRecord> kept;
  kept.reserve(ledger.events().size());
  std::vector<double> weekly_sum(weeks, 0.0);
  for (const auto& e : ledger.events()) {
    const int w = week_of(trace.customers[e.customer].entry);
    if (w >= 0 && static_cast<std::size_t>(w) < weeks) weekly_sum[w] += settings.weights[e.kind];
    if (counted(e.customer)) kept.push_back(e);
  }
  r.service_level_index = service_level_index(kept, settings.weights, r.customers_arrived);
  r.help_index = service_level_index(kept, settings.weights, r.customers_arrived, ServicePath::help);
  r.till_index = service_level_index(kept, settings.weights, r.customers_arrived, ServicePath::till);

  std::vector<double> help_waits;
  std::vector<double> till_waits;
  std::vector<std::vector<double>> weekly_till(weeks);
  for (const auto& w : trace.waits) {
    if (w.kind == RequestKind::till) {
      if (auto* wk = week_slot(w.customer)) weekly_till[wk - r.weekly.data()].push_back(w.wait);
    }
    if (!counted(w.customer)) continue;
    (w.kind == RequestKind::till ? till_waits : help_waits).push_back(w.wait);
  }
  r.mean_help_wait = mean_of(help_waits);
  r.p95_help_wait = percentile(help_waits, 0.95);
  r.mean_till_wait = mean_of(till_waits);
  r.p95_till_wait = percentile(till_waits, 0.95);

  for (std::size_t w = 0; w < weeks; ++w) {
    auto& wk = r.weekly[w];
    wk.service_level_index =
        wk.customers_arrived ? weekly_sum[w] / static_cast<double>(wk.customers_arrived) : 0.0;
    wk.mean_till_wait = mean_of(weekly_till[w]);
  }

  std::array<double, 4> busy{};
  std::array<double, 4> heads{};
  for (const auto& s : trace.staff) {
    busy[static_cast<std::size_t>(s.role)] += s.busy_minutes;
    heads[static_cast<std::size_t>(s.role)] += 1.0;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const double capacity = heads[i] * trace.staffed_minutes;
    r.utilization[i] = capacity > 0.0 ? std::clamp(busy[i] / capacity, 0.0, 1.0) : 0.0;
  }
  return r;
}

std::optional<double> kpi_value(const KpiReport& r, std::string_view name) {
  auto d = [](std::uint64_t v) { return static_cast<double>(v); };
  if (name == "transactions") return d(r.transactions);
  if (name == "service_level_index") return r.service_level_index;
  if (name == "help_index") return r.help_index;
  if (name == "till_index") return r.till_index;
  if (name == "mean_help_wait") return r.mean_help_wait;
  if (name == "mean_till_wait") return r.mean_till_wait;
  if (name == "p95_till_wait") return r.p95_till_wait;
  if (name == "abandoned_help") return d(r.abandoned_help);
  if (name == "abandoned_till") return d(r.abandoned_till);
  if (name == "util_cashier") return r.utilization_of(StaffRole::cashier);
  if (name == "util_seller_normal") return r.utilization_of(StaffRole::seller_normal);
  if (name == "util_seller_expert") return r.utilization_of(StaffRole::seller_expert);
  if (name == "util_manager") return r.utilization_of(StaffRole::section_manager);
  return std::nullopt;
}

}  // namespace retailsim::metrics
