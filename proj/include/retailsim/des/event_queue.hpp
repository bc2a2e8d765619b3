#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "retailsim/des/sim_time.hpp"

namespace retailsim::des {

enum class EventKind : std::uint8_t {
  arrival,
  delay_elapsed,
  patience_expired,
  service_complete,
  shop_close,
  report_tick,
};

const char* to_string(EventKind kind);

struct Event {
  SimTime time = 0.0;
  std::uint64_t seq = 0;  // assigned by EventQueue::schedule
  AgentId target = 0;
  EventKind kind = EventKind::arrival;
  std::uint64_t token = 0;  // kind-specific payload (request serial, day index, ...)
};

/// Min-heap of events keyed by (time, seq). Equal times dispatch in
/// scheduling order.
class EventQueue {
public:
  /// Schedules `event` and returns the sequence number it was given.
  /// Throws ModelError when event.time is before the current clock.
  std::uint64_t schedule(Event event);

  /// Lazily removes a pending event; it will be skipped by pop_next().
  /// Returns false when `seq` is not pending (already dispatched or cancelled).
  bool cancel(std::uint64_t seq);

  std::optional<Event> pop_next();

  [[nodiscard]] SimTime now() const { return now_; }
  [[nodiscard]] bool empty() const { return live_.empty(); }
  [[nodiscard]] std::size_t pending() const { return live_.size(); }

private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::unordered_set<std::uint64_t> live_;
  SimTime now_ = 0.0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace retailsim::des
