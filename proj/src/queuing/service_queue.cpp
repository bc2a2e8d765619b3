#include "retailsim/queuing/service_queue.hpp"

#include <algorithm>
#include <string>

namespace retailsim::queuing {

std::string_view to_string(QueueRule rule) {
  switch (rule) {
    case QueueRule::fifo: return "fifo";
    case QueueRule::lifo: return "lifo";
    case QueueRule::shortest_deadline_first: return "shortest_deadline_first";
  }
  return "unknown";
}

std::optional<QueueRule> parse_queue_rule(std::string_view name) {
  for (auto rule : {QueueRule::fifo, QueueRule::lifo, QueueRule::shortest_deadline_first}) {
    if (to_string(rule) == name) return rule;
  }
  return std::nullopt;
}

void ServiceQueue::push(const QueueEntry& entry) {
  if (contains(entry.customer)) {
    throw ModelError("customer " + std::to_string(entry.customer) + " already queued for " +
                     std::string(to_string(kind_)));
  }
  if (!(entry.deadline >= entry.enqueued)) {
    throw ModelError("queue deadline must not precede enqueue time");
  }
  entries_.push_back(entry);
}

std::optional<QueueEntry> ServiceQueue::pop_next() {
  if (entries_.empty()) return std::nullopt;
  auto it = entries_.begin();
  switch (rule_) {
    case QueueRule::fifo: break;
    case QueueRule::lifo: it = std::prev(entries_.end()); break;
    case QueueRule::shortest_deadline_first:
      // min_element keeps the first of equal deadlines, i.e. the earliest enqueued.
      it = std::min_element(entries_.begin(), entries_.end(),
                            [](const QueueEntry& a, const QueueEntry& b) { return a.deadline < b.deadline; });
      break;
  }
  QueueEntry out = *it;
  entries_.erase(it);
  return out;
}

std::optional<QueueEntry> ServiceQueue::remove(AgentId customer, std::uint64_t token) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const QueueEntry& e) {
    return e.customer == customer && e.token == token;
  });
  if (it == entries_.end()) return std::nullopt;
  QueueEntry out = *it;
  entries_.erase(it);
  return out;
}

bool ServiceQueue::contains(AgentId customer) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const QueueEntry& e) { return e.customer == customer; });
}

}  // namespace retailsim::queuing
