#include "retailsim/metrics/satisfaction.hpp"

namespace retailsim::metrics {

std::string_view to_string(SatisfactionEventKind kind) {
  switch (kind) {
    case SatisfactionEventKind::served_immediately: return "served_immediately";
    case SatisfactionEventKind::served_after_wait: return "served_after_wait";
    case SatisfactionEventKind::help_abandoned: return "help_abandoned";
    case SatisfactionEventKind::till_abandoned: return "till_abandoned";
    case SatisfactionEventKind::purchase_completed: return "purchase_completed";
    case SatisfactionEventKind::left_without_purchase: return "left_without_purchase";
  }
  return "unknown";
}

std::optional<SatisfactionEventKind> parse_satisfaction_kind(std::string_view name) {
  for (auto kind : kAllSatisfactionKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

SatisfactionWeights SatisfactionWeights::defaults() {
  SatisfactionWeights w;
  w[SatisfactionEventKind::served_immediately] = 2.0;
  w[SatisfactionEventKind::served_after_wait] = 1.0;
  w[SatisfactionEventKind::purchase_completed] = 2.0;
  w[SatisfactionEventKind::left_without_purchase] = 0.0;
  w[SatisfactionEventKind::help_abandoned] = -2.0;
  w[SatisfactionEventKind::till_abandoned] = -3.0;
  return w;
}

SatisfactionWeights SatisfactionWeights::scaled(double factor) const {
  SatisfactionWeights out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

std::optional<std::string> SatisfactionWeights::validate() const {
  bool positive = false;
  bool negative = false;
  for (double v : values_) {
    if (v != v) return "satisfaction weight is NaN";
    positive = positive || v > 0.0;
    negative = negative || v < 0.0;
  }
  if (!positive || !negative) {
    return "satisfaction weights need at least one positive and one negative value";
  }
  return std::nullopt;
}

void Ledger::record(AgentId customer, SatisfactionEventKind kind, ServicePath path, SimTime now) {
  if (customer >= by_customer_.size()) by_customer_.resize(customer + 1);
  by_customer_[customer].push_back(static_cast<std::uint32_t>(events_.size()));
  events_.push_back({now, customer, kind, path});
}

std::vector<SatisfactionRecord> Ledger::customer_log(AgentId customer) const {
  std::vector<SatisfactionRecord> out;
  if (customer >= by_customer_.size()) return out;
  out.reserve(by_customer_[customer].size());
  for (auto index : by_customer_[customer]) out.push_back(events_[index]);
  return out;
}

double service_level_index(std::span<const SatisfactionRecord> events,
                           const SatisfactionWeights& weights, std::uint64_t customers_arrived,
                           std::optional<ServicePath> path) {
  if (customers_arrived == 0) return 0.0;
  double total = 0.0;
  for (const auto& e : events) {
    if (path && e.path != *path) continue;
    total += weights[e.kind];
  }
  return total / static_cast<double>(customers_arrived);
}

}  // namespace retailsim::metrics
