#include "retailsim/des/event_queue.hpp"

#include <cmath>
#include <string>

namespace retailsim::des {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::arrival: return "arrival";
    case EventKind::delay_elapsed: return "delay_elapsed";
    case EventKind::patience_expired: return "patience_expired";
    case EventKind::service_complete: return "service_complete";
    case EventKind::shop_close: return "shop_close";
    case EventKind::report_tick: return "report_tick";
  }
  return "unknown";
}

std::uint64_t EventQueue::schedule(Event event) {
  if (std::isnan(event.time) || event.time < now_) {
    throw ModelError("event scheduled at t=" + std::to_string(event.time) +
                     " before current clock t=" + std::to_string(now_));
  }
  event.seq = next_seq_++;
  heap_.push(event);
  live_.insert(event.seq);
  return event.seq;
}

bool EventQueue::cancel(std::uint64_t seq) { return live_.erase(seq) > 0; }

std::optional<Event> EventQueue::pop_next() {
  while (!heap_.empty()) {
    Event top = heap_.top();
    heap_.pop();
    if (live_.erase(top.seq) == 0) continue;
    now_ = top.time;
    return top;
  }
  return std::nullopt;
}

}  // namespace retailsim::des
