#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "retailsim/agents/staff.hpp"
#include "retailsim/queuing/service_queue.hpp"

namespace retailsim::queuing {

/// A staff member was matched to a customer and service has started.
struct Assignment {
  AgentId staff = 0;
  AgentId customer = 0;
  RequestKind kind = RequestKind::till;
  SimTime requested = 0.0;
  SimTime started = 0.0;
  des::Event completion;

  [[nodiscard]] double wait() const { return started - requested; }
};

/// No qualified staff was free; the customer waits until `deadline`.
struct Enqueued {
  std::uint64_t token = 0;
  SimTime deadline = kNever;
};

using RequestOutcome = std::variant<Assignment, Enqueued>;

/// Looks up the service-time stream of a queued customer when a freed staff
/// member picks them up.
using StreamLookup = std::function<des::RngStream&(AgentId customer)>;

/// Matches typed service requests to qualified, available staff. Keeps one
/// queue per request kind. Till service also needs a free till; the number
/// of tills defaults to the cashier headcount.
class ServiceDesk {
public:
  ServiceDesk(std::vector<agents::StaffAgent> roster, agents::ServiceTimes times, QueueRule rule,
              std::size_t tills);

  /// Serves the request at once when possible, else queues it and schedules
  /// a patience_expired event (target = customer, token = request token) at
  /// now + patience. Infinite patience schedules nothing. A second open
  /// request for the same customer throws ModelError.
  RequestOutcome request_service(AgentId customer, RequestKind kind, SimTime now, double patience,
                                 des::RngStream& service_stream, des::EventQueue& events);

  /// Offers a newly available staff member to the queues it can work
  /// (expert help, then normal help, then till), then re-checks the other
  /// queues in case the freed till unblocks someone else.
  std::vector<Assignment> on_staff_freed(AgentId staff, SimTime now, const StreamLookup& streams,
                                         des::EventQueue& events);

  /// release_staff followed by on_staff_freed.
  std::vector<Assignment> release(AgentId staff, SimTime now, const StreamLookup& streams,
                                  des::EventQueue& events);

  /// Handles a patience_expired event. Returns the removed entry, or nullopt
  /// for a stale event (the request was already served).
  std::optional<QueueEntry> renege(AgentId customer, std::uint64_t token, SimTime now);

  /// Among the qualified candidates: least-qualified first, then longest
  /// idle, then lowest id. Throws ModelError when nobody is qualified.
  static AgentId select_staff(std::span<const agents::StaffAgent* const> candidates,
                              RequestKind kind);

  [[nodiscard]] const std::vector<agents::StaffAgent>& staff() const { return roster_; }
  [[nodiscard]] const ServiceQueue& queue(RequestKind kind) const {
    return queues_[static_cast<std::size_t>(kind)];
  }
  [[nodiscard]] std::size_t tills() const { return tills_; }
  [[nodiscard]] std::size_t tills_busy() const { return tills_busy_; }
  [[nodiscard]] bool has_open_request(AgentId customer) const { return open_.contains(customer); }
  [[nodiscard]] std::size_t headcount(StaffRole role) const;
  [[nodiscard]] std::size_t serving_count(StaffRole role) const;

private:
  struct OpenRequest {
    RequestKind kind;
    std::uint64_t token;
  };

  bool till_free() const { return tills_busy_ < tills_; }
  bool can_take(const agents::StaffAgent& s, RequestKind kind) const;
  std::optional<AgentId> pick(RequestKind kind) const;
  Assignment start(AgentId staff, AgentId customer, RequestKind kind, SimTime requested,
                   SimTime now, des::RngStream& stream, des::EventQueue& events);
  Assignment start_from_queue(AgentId staff, RequestKind kind, SimTime now,
                              const StreamLookup& streams, des::EventQueue& events);

  std::vector<agents::StaffAgent> roster_;
  agents::ServiceTimes times_;
  std::array<ServiceQueue, 3> queues_;
  std::size_t tills_ = 0;
  std::size_t tills_busy_ = 0;
  std::uint64_t next_token_ = 1;
  std::unordered_map<AgentId, OpenRequest> open_;
};

}  // namespace retailsim::queuing
