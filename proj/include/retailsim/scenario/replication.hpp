#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "retailsim/agents/customer.hpp"
#include "retailsim/agents/staff.hpp"
#include "retailsim/des/event_queue.hpp"
#include "retailsim/metrics/kpi.hpp"
#include "retailsim/queuing/service_desk.hpp"
#include "retailsim/scenario/config.hpp"

namespace retailsim::scenario {

/// Population counts at a report tick or shop close.
struct FloorSnapshot {
  SimTime time = 0.0;
  std::uint64_t arrived = 0;
  std::uint64_t in_system = 0;
  std::array<std::uint64_t, agents::kOutcomeCount> departures{};
  std::array<int, 4> headcount{};  // by StaffRole
  std::array<int, 4> serving{};
  std::array<int, 4> available{};
};

/// Hooks for auditors and tests. All callbacks run on the replication thread.
class TraceObserver {
public:
  virtual ~TraceObserver() = default;
  virtual void on_event(const des::Event& /*event*/) {}
  virtual void on_transition(AgentId /*customer*/, agents::CustomerState /*from*/,
                             agents::Trigger /*trigger*/, agents::CustomerState /*to*/,
                             SimTime /*now*/) {}
  virtual void on_assignment(const queuing::Assignment& /*assignment*/) {}
  virtual void on_snapshot(const FloorSnapshot& /*snapshot*/) {}
};

/// Everything a finished replication produced.
struct ReplicationRun {
  metrics::KpiReport report;
  metrics::Ledger ledger;
  metrics::ReplicationTrace trace;
  std::vector<agents::CustomerAgent> customers;
  std::vector<agents::StaffAgent> staff;
  std::uint64_t events_dispatched = 0;
};

/// Builds the staff roster for a staffing mix; ids follow role order.
std::vector<agents::StaffAgent> make_roster(const StaffingMix& staffing);

/// Runs replication `index` of a validated config. Streams derive from
/// (config.seed, index). Arrivals stop at each day's closing time and the
/// shop drains naturally.
ReplicationRun simulate(const ScenarioConfig& config, int index, TraceObserver* observer = nullptr);

metrics::KpiReport run_replication(const ScenarioConfig& config, int index,
                                   TraceObserver* observer = nullptr);

}  // namespace retailsim::scenario
