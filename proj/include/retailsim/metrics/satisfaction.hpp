#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/agents/roles.hpp"
#include "retailsim/des/sim_time.hpp"

namespace retailsim::metrics {

enum class SatisfactionEventKind : std::uint8_t {
  served_immediately = 0,
  served_after_wait = 1,
  help_abandoned = 2,
  till_abandoned = 3,
  purchase_completed = 4,
  left_without_purchase = 5,
};

inline constexpr std::size_t kSatisfactionKindCount = 6;

inline constexpr std::array<SatisfactionEventKind, kSatisfactionKindCount> kAllSatisfactionKinds = {
    SatisfactionEventKind::served_immediately, SatisfactionEventKind::served_after_wait,
    SatisfactionEventKind::help_abandoned,     SatisfactionEventKind::till_abandoned,
    SatisfactionEventKind::purchase_completed, SatisfactionEventKind::left_without_purchase};

std::string_view to_string(SatisfactionEventKind kind);
std::optional<SatisfactionEventKind> parse_satisfaction_kind(std::string_view name);

/// True for the events that end a customer's visit.
constexpr bool is_terminal(SatisfactionEventKind kind) {
  return kind != SatisfactionEventKind::served_immediately &&
         kind != SatisfactionEventKind::served_after_wait;
}

/// Which service block an event belongs to. Drives the help/till sub-indices.
enum class ServicePath : std::uint8_t { none, help, till };

class SatisfactionWeights {
public:
  /// Placeholder magnitudes with the intended sign structure; analysts are
  /// expected to override them.
  static SatisfactionWeights defaults();
  static SatisfactionWeights zeros() { return SatisfactionWeights{}; }

  double& operator[](SatisfactionEventKind kind) { return values_[static_cast<std::size_t>(kind)]; }
  double operator[](SatisfactionEventKind kind) const {
    return values_[static_cast<std::size_t>(kind)];
  }

  SatisfactionWeights scaled(double factor) const;

  /// Requires at least one positive and one negative weight.
  std::optional<std::string> validate() const;

  bool operator==(const SatisfactionWeights&) const = default;

private:
  std::array<double, kSatisfactionKindCount> values_{};
};

struct SatisfactionRecord {
  SimTime time = 0.0;
  AgentId customer = 0;
  SatisfactionEventKind kind = SatisfactionEventKind::served_immediately;
  ServicePath path = ServicePath::none;
};

/// Replication-wide log of satisfaction events, also indexed per customer.
class Ledger {
public:
  void record(AgentId customer, SatisfactionEventKind kind, ServicePath path, SimTime now);

  [[nodiscard]] std::span<const SatisfactionRecord> events() const { return events_; }
  [[nodiscard]] std::vector<SatisfactionRecord> customer_log(AgentId customer) const;
  [[nodiscard]] std::size_t customer_count() const { return by_customer_.size(); }

private:
  std::vector<SatisfactionRecord> events_;
  std::vector<std::vector<std::uint32_t>> by_customer_;
};

/// Per-arrival weighted sum of satisfaction events. With `path` set, only
/// events on that service block contribute. Zero arrivals gives 0.
double service_level_index(std::span<const SatisfactionRecord> events,
                           const SatisfactionWeights& weights, std::uint64_t customers_arrived,
                           std::optional<ServicePath> path = std::nullopt);

}  // namespace retailsim::metrics
