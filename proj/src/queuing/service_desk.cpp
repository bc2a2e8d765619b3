#include "retailsim/queuing/service_desk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace retailsim::queuing {

namespace {

// Queue scan order for a freed staff member.
constexpr std::array<RequestKind, 3> kScanOrder = {RequestKind::help_expert,
                                                   RequestKind::help_normal, RequestKind::till};

}  // namespace

ServiceDesk::ServiceDesk(std::vector<agents::StaffAgent> roster, agents::ServiceTimes times,
                         QueueRule rule, std::size_t tills)
    : roster_(std::move(roster)),
      times_(std::move(times)),
      queues_{ServiceQueue(RequestKind::till, rule), ServiceQueue(RequestKind::help_normal, rule),
              ServiceQueue(RequestKind::help_expert, rule)},
      tills_(tills) {
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    if (roster_[i].id != i) throw ModelError("staff ids must equal their roster index");
  }
}

std::size_t ServiceDesk::headcount(StaffRole role) const {
  return static_cast<std::size_t>(std::count_if(
      roster_.begin(), roster_.end(), [&](const auto& s) { return s.role == role; }));
}

std::size_t ServiceDesk::serving_count(StaffRole role) const {
  return static_cast<std::size_t>(std::count_if(roster_.begin(), roster_.end(), [&](const auto& s) {
    return s.role == role && s.serving;
  }));
}

bool ServiceDesk::can_take(const agents::StaffAgent& s, RequestKind kind) const {
  return s.available() && agents::qualified(s.role, kind) &&
         (kind != RequestKind::till || till_free());
}

AgentId ServiceDesk::select_staff(std::span<const agents::StaffAgent* const> candidates,
                                  RequestKind kind) {
  const agents::StaffAgent* best = nullptr;
  const auto better = [](const agents::StaffAgent* a, const agents::StaffAgent* b) {
    const int ra = agents::skill_rank(a->role);
    const int rb = agents::skill_rank(b->role);
    if (ra != rb) return ra < rb;
    if (a->idle_since != b->idle_since) return a->idle_since < b->idle_since;
    return a->id < b->id;
  };
  for (const auto* s : candidates) {
    if (agents::qualified(s->role, kind) && (!best || better(s, best))) best = s;
  }
  if (!best) throw ModelError("select_staff: no candidate is qualified for " + std::string(to_string(kind)));
  return best->id;
}

std::optional<AgentId> ServiceDesk::pick(RequestKind kind) const {
  std::vector<const agents::StaffAgent*> candidates;
  for (const auto& s : roster_) {
    if (can_take(s, kind)) candidates.push_back(&s);
  }
  if (candidates.empty()) return std::nullopt;
  return select_staff(candidates, kind);
}

Assignment ServiceDesk::start(AgentId staff, AgentId customer, RequestKind kind,
                              SimTime requested, SimTime now, des::RngStream& stream,
                              des::EventQueue& events) {
  Assignment a;
  a.staff = staff;
  a.customer = customer;
  a.kind = kind;
  a.requested = requested;
  a.started = now;
  a.completion = agents::begin_service(roster_[staff], customer, kind, times_.for_kind(kind), stream,
                                       now, events);
  if (kind == RequestKind::till) ++tills_busy_;
  open_.erase(customer);
  return a;
}

RequestOutcome ServiceDesk::request_service(AgentId customer, RequestKind kind, SimTime now,
                                            double patience, des::RngStream& service_stream,
                                            des::EventQueue& events) {
  if (open_.contains(customer)) {
    throw ModelError("customer " + std::to_string(customer) + " already has an open request");
  }
  const std::uint64_t token = next_token_++;
  open_.emplace(customer, OpenRequest{kind, token});

  if (auto staff = pick(kind)) {
    return start(*staff, customer, kind, now, now, service_stream, events);
  }

  QueueEntry entry;
  entry.customer = customer;
  entry.enqueued = now;
  entry.deadline = now + patience;
  entry.token = token;
  if (std::isfinite(entry.deadline)) {
    entry.patience_event =
        events.schedule({entry.deadline, 0, customer, des::EventKind::patience_expired, token});
    entry.has_patience_event = true;
  }
  queues_[static_cast<std::size_t>(kind)].push(entry);
  return Enqueued{token, entry.deadline};
}

Assignment ServiceDesk::start_from_queue(AgentId staff, RequestKind kind, SimTime now,
                                         const StreamLookup& streams, des::EventQueue& events) {
  auto entry = queues_[static_cast<std::size_t>(kind)].pop_next();
  if (entry->has_patience_event) events.cancel(entry->patience_event);
  return start(staff, entry->customer, kind, entry->enqueued, now, streams(entry->customer), events);
}

std::vector<Assignment> ServiceDesk::on_staff_freed(AgentId staff, SimTime now,
                                                    const StreamLookup& streams,
                                                    des::EventQueue& events) {
  std::vector<Assignment> out;
  if (!roster_.at(staff).available()) {
    throw ModelError("on_staff_freed for busy staff " + std::to_string(staff));
  }
  for (auto kind : kScanOrder) {
    if (!queue(kind).empty() && can_take(roster_[staff], kind)) {
      out.push_back(start_from_queue(staff, kind, now, streams, events));
      break;
    }
  }
  // A till released by a seller may now let a waiting till customer through
  // with some other idle staff member.
  for (auto kind : kScanOrder) {
    while (!queue(kind).empty()) {
      auto other = pick(kind);
      if (!other) break;
      out.push_back(start_from_queue(*other, kind, now, streams, events));
    }
  }
  return out;
}

std::vector<Assignment> ServiceDesk::release(AgentId staff, SimTime now,
                                             const StreamLookup& streams,
                                             des::EventQueue& events) {
  auto& s = roster_.at(staff);
  const bool was_till = s.serving && s.kind == RequestKind::till;
  agents::release_staff(s, now);
  if (was_till) --tills_busy_;
  return on_staff_freed(staff, now, streams, events);
}

std::optional<QueueEntry> ServiceDesk::renege(AgentId customer, std::uint64_t token,
                                              SimTime /*now*/) {
  auto it = open_.find(customer);
  if (it == open_.end() || it->second.token != token) return std::nullopt;
  auto removed = queues_[static_cast<std::size_t>(it->second.kind)].remove(customer, token);
  if (removed) open_.erase(it);
  return removed;
}

}  // namespace retailsim::queuing
