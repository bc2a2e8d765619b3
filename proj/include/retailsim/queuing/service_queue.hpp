#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "retailsim/agents/roles.hpp"
#include "retailsim/des/sim_time.hpp"

namespace retailsim::queuing {

enum class QueueRule : std::uint8_t { fifo, lifo, shortest_deadline_first };

std::string_view to_string(QueueRule rule);
std::optional<QueueRule> parse_queue_rule(std::string_view name);

struct QueueEntry {
  AgentId customer = 0;
  SimTime enqueued = 0.0;
  SimTime deadline = kNever;
  std::uint64_t token = 0;           // request serial; ties and stale-event detection
  std::uint64_t patience_event = 0;  // seq of the pending patience event
  bool has_patience_event = false;
};

/// Waiting line for one request kind. The rule decides which entry leaves
/// next; ties fall back to enqueue order.
class ServiceQueue {
public:
  ServiceQueue(RequestKind kind, QueueRule rule) : kind_(kind), rule_(rule) {}

  /// Throws ModelError on a duplicate customer or a deadline before the
  /// enqueue time. A deadline equal to the enqueue time (zero patience) is
  /// allowed; the patience event fires at the same instant.
  void push(const QueueEntry& entry);

  std::optional<QueueEntry> pop_next();

  /// Removes the entry of `customer` if its token matches.
  std::optional<QueueEntry> remove(AgentId customer, std::uint64_t token);

  [[nodiscard]] bool contains(AgentId customer) const;
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] RequestKind kind() const { return kind_; }
  [[nodiscard]] QueueRule rule() const { return rule_; }
  [[nodiscard]] const std::vector<QueueEntry>& entries() const { return entries_; }

private:
  RequestKind kind_;
  QueueRule rule_;
  std::vector<QueueEntry> entries_;  // in enqueue order
};

}  // namespace retailsim::queuing
