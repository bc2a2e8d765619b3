#pragma once

#include <cstdint>
#include <optional>

#include "retailsim/agents/roles.hpp"
#include "retailsim/des/distribution.hpp"
#include "retailsim/des/event_queue.hpp"

namespace retailsim::agents {

/// Service-time distribution per request kind, in minutes.
struct ServiceTimes {
  des::Distribution till = des::Triangular{1.0, 2.0, 4.0};
  des::Distribution help_normal = des::Triangular{3.0, 8.0, 20.0};
  des::Distribution help_expert = des::Triangular{3.0, 8.0, 20.0};

  [[nodiscard]] const des::Distribution& for_kind(RequestKind kind) const;
};

/// Capability matrix: cashiers work tills only, normal sellers add normal
/// help, experts cover everything, managers cover both help levels.
constexpr bool qualified(StaffRole role, RequestKind kind) {
  switch (role) {
    case StaffRole::cashier: return kind == RequestKind::till;
    case StaffRole::seller_normal: return kind != RequestKind::help_expert;
    case StaffRole::seller_expert: return true;
    case StaffRole::section_manager: return kind != RequestKind::till;
  }
  return false;
}

/// Rank used for least-qualified-first selection; lower is preferred.
constexpr int skill_rank(StaffRole role) {
  switch (role) {
    case StaffRole::cashier: return 0;
    case StaffRole::seller_normal: return 1;
    case StaffRole::seller_expert: return 2;
    case StaffRole::section_manager: return 3;
  }
  return 4;
}

struct StaffAgent {
  AgentId id = 0;
  StaffRole role = StaffRole::cashier;

  bool serving = false;
  AgentId customer = 0;
  RequestKind kind = RequestKind::till;
  SimTime service_start = 0.0;
  SimTime idle_since = 0.0;

  double busy_minutes = 0.0;     // accumulated at release
  double sampled_minutes = 0.0;  // accumulated at begin_service
  std::uint64_t services = 0;

  [[nodiscard]] bool available() const { return !serving; }
};

/// Starts serving `customer`: draws a duration from `service` using the
/// customer's stream and schedules service_complete (target = customer,
/// token = staff id). Throws ModelError when the staff member is busy or
/// unqualified for `kind`. Returns the scheduled event.
des::Event begin_service(StaffAgent& staff, AgentId customer, RequestKind kind,
                         const des::Distribution& service, des::RngStream& stream, SimTime now,
                         des::EventQueue& events);

struct StaffFreed {
  AgentId staff = 0;
  SimTime time = 0.0;
};

/// Ends the current service. Throws ModelError when the staff member is not
/// serving anybody.
StaffFreed release_staff(StaffAgent& staff, SimTime now);

}  // namespace retailsim::agents
