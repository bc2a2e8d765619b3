#include "retailsim/agents/staff.hpp"

#include <string>

namespace retailsim::agents {

const des::Distribution& ServiceTimes::for_kind(RequestKind kind) const {
  switch (kind) {
    case RequestKind::till: return till;
    case RequestKind::help_normal: return help_normal;
    case RequestKind::help_expert: return help_expert;
  }
  return till;
}

des::Event begin_service(StaffAgent& staff, AgentId customer, RequestKind kind,
                         const des::Distribution& service, des::RngStream& stream, SimTime now,
                         des::EventQueue& events) {
  if (staff.serving) {
    throw ModelError("staff " + std::to_string(staff.id) + " is already serving customer " +
                     std::to_string(staff.customer));
  }
  if (!qualified(staff.role, kind)) {
    throw ModelError("staff " + std::to_string(staff.id) + " (" + std::string(to_string(staff.role)) +
                     ") is not qualified for " + std::string(to_string(kind)));
  }
  const double duration = des::sample(service, stream);
  staff.serving = true;
  staff.customer = customer;
  staff.kind = kind;
  staff.service_start = now;
  staff.sampled_minutes += duration;
  ++staff.services;

  des::Event done{now + duration, 0, customer, des::EventKind::service_complete, staff.id};
  done.seq = events.schedule(done);
  return done;
}

StaffFreed release_staff(StaffAgent& staff, SimTime now) {
  if (!staff.serving) {
    throw ModelError("staff " + std::to_string(staff.id) + " released while available");
  }
  staff.serving = false;
  staff.busy_minutes += now - staff.service_start;
  staff.idle_since = now;
  return {staff.id, now};
}

}  // namespace retailsim::agents
