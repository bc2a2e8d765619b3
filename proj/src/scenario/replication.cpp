#include "retailsim/scenario/replication.hpp"

#include <algorithm>
#include <cmath>

namespace retailsim::scenario {

std::vector<agents::StaffAgent> make_roster(const StaffingMix& staffing) {
  std::vector<agents::StaffAgent> roster;
  for (auto role : kAllStaffRoles) {
    for (int i = 0; i < staffing.count(role); ++i) {
      agents::StaffAgent s;
      s.id = static_cast<AgentId>(roster.size());
      s.role = role;
      roster.push_back(s);
    }
  }
  return roster;
}

namespace {

using agents::CustomerState;
using agents::Trigger;
using des::EventKind;

class ShopFloor {
public:
  ShopFloor(const ScenarioConfig& config, int index, TraceObserver* observer)
      : config_(config),
        observer_(observer),
        seed_(des::replication_seed(config.seed, static_cast<std::uint64_t>(index))),
        arrivals_(seed_, des::stream_id(des::Population::shop, des::Category::interarrival)),
        desk_(make_roster(config.staffing), config.service, config.queue_rule,
              static_cast<std::size_t>(std::max(config.staffing.open_tills(), 0))),
        days_(config.weeks * config.schedule.days_per_week),
        last_exit_(static_cast<std::size_t>(std::max(days_, 0)), 0.0) {
    counted_busy_.assign(desk_.staff().size(), 0.0);
  }

  ReplicationRun run() {
    for (int d = 0; d < days_; ++d) events_.schedule({close_of(d), 0, 0, EventKind::shop_close, static_cast<std::uint64_t>(d)});
    for (int w = 1; w <= config_.weeks; ++w) {
      events_.schedule({w * kMinutesPerWeek, 0, 0, EventKind::report_tick, static_cast<std::uint64_t>(w)});
    }
    if (days_ > 0) schedule_arrival(0, open_of(0));

    std::uint64_t dispatched = 0;
    while (auto event = events_.pop_next()) {
      ++dispatched;
      if (observer_) observer_->on_event(*event);
      dispatch(*event);
    }
    return finish(dispatched);
  }

private:
  SimTime open_of(int day) const {
    const int dpw = config_.schedule.days_per_week;
    return (day / dpw) * kMinutesPerWeek + (day % dpw) * kMinutesPerDay;
  }
  SimTime close_of(int day) const { return open_of(day) + config_.schedule.hours_per_day * 60.0; }

  bool counted_customer(AgentId id) const {
    return metrics::week_of(customers_[id].entry_time) >= config_.warmup_weeks;
  }

  void schedule_arrival(int day, SimTime from) {
    const SimTime t = from + des::sample(config_.interarrival, arrivals_);
    if (t < close_of(day)) events_.schedule({t, 0, 0, EventKind::arrival, static_cast<std::uint64_t>(day)});
  }

  void dispatch(const des::Event& e) {
    const SimTime now = e.time;
    switch (e.kind) {
      case EventKind::arrival: {
        const auto id = static_cast<AgentId>(customers_.size());
        const int day = static_cast<int>(e.token);
        customers_.push_back(agents::spawn_customer(config_.customers, id, seed_, now, events_));
        customer_day_.push_back(day);
        ++in_system_;
        schedule_arrival(day, now);
        break;
      }
      case EventKind::delay_elapsed: apply(e.target, Trigger::delay_elapsed, now, 0); break;
      case EventKind::patience_expired:
        if (desk_.renege(e.target, e.token, now)) apply(e.target, Trigger::patience_expired, now, 0);
        break;
      case EventKind::service_complete:
        apply(e.target, Trigger::service_complete, now, static_cast<AgentId>(e.token));
        break;
      case EventKind::shop_close: {
        const int next = static_cast<int>(e.token) + 1;
        if (next < days_) schedule_arrival(next, open_of(next));
        snapshot(now);
        break;
      }
      case EventKind::report_tick: snapshot(now); break;
    }
  }

  void apply(AgentId id, Trigger trigger, SimTime now, AgentId staff) {
    auto& c = customers_[id];
    const auto r = agents::transition(c, trigger, now);
    if (observer_) observer_->on_transition(id, r.from, trigger, r.to, now);
    if (r.satisfaction) ledger_.record(id, *r.satisfaction, r.path, now);
    if (r.to == CustomerState::departed) {
      --in_system_;
      ++departures_[static_cast<std::size_t>(*c.outcome)];
      auto& last = last_exit_[static_cast<std::size_t>(customer_day_[id])];
      last = std::max(last, now);
    }
    if (r.delay) events_.schedule({now + *r.delay, 0, id, EventKind::delay_elapsed, 0});
    if (r.release_staff) release(staff, now);
    if (r.request) request(id, *r.request, now);
  }

  void release(AgentId staff, SimTime now) {
    const auto& s = desk_.staff()[staff];
    if (s.serving && counted_customer(s.customer)) counted_busy_[staff] += now - s.service_start;
    auto assignments = desk_.release(staff, now, stream_lookup(), events_);
    for (const auto& a : assignments) assigned(a);
  }

  void request(AgentId id, RequestKind kind, SimTime now) {
    auto& c = customers_[id];
    const double patience =
        kind == RequestKind::till ? c.attributes.till_patience : c.attributes.help_patience;
    auto outcome = desk_.request_service(id, kind, now, patience, c.streams.service, events_);
    if (auto* a = std::get_if<queuing::Assignment>(&outcome)) assigned(*a);
  }

  void assigned(const queuing::Assignment& a) {
    waits_.push_back({a.customer, a.kind, a.wait()});
    if (observer_) observer_->on_assignment(a);
    apply(a.customer, Trigger::assigned, a.started, a.staff);
  }

  queuing::StreamLookup stream_lookup() {
    return [this](AgentId id) -> des::RngStream& { return customers_[id].streams.service; };
  }

  void snapshot(SimTime now) {
    if (!observer_) return;
    FloorSnapshot s;
    s.time = now;
    s.arrived = customers_.size();
    s.in_system = in_system_;
    s.departures = departures_;
    for (const auto& staff : desk_.staff()) {
      const auto r = static_cast<std::size_t>(staff.role);
      ++s.headcount[r];
      ++(staff.serving ? s.serving[r] : s.available[r]);
    }
    observer_->on_snapshot(s);
  }

  double staffed_minutes() const {
    // Union of [open, max(close, last exit)] over counted days.
    std::vector<std::pair<double, double>> spans;
    for (int d = 0; d < days_; ++d) {
      if (metrics::week_of(open_of(d)) < config_.warmup_weeks) continue;
      spans.emplace_back(open_of(d), std::max(close_of(d), last_exit_[static_cast<std::size_t>(d)]));
    }
    double total = 0.0;
    double cur_lo = 0.0;
    double cur_hi = -1.0;
    for (const auto& [lo, hi] : spans) {
      if (lo > cur_hi) {
        if (cur_hi > cur_lo) total += cur_hi - cur_lo;
        cur_lo = lo;
        cur_hi = hi;
      } else {
        cur_hi = std::max(cur_hi, hi);
      }
    }
    if (cur_hi > cur_lo) total += cur_hi - cur_lo;
    return total;
  }

  ReplicationRun finish(std::uint64_t dispatched) {
    snapshot(events_.now());
    ReplicationRun out;
    out.events_dispatched = dispatched;

    auto& t = out.trace;
    t.customers.reserve(customers_.size());
    for (const auto& c : customers_) t.customers.push_back({c.id, c.entry_time, c.outcome, c.services_received});
    t.waits = std::move(waits_);
    for (const auto& s : desk_.staff()) t.staff.push_back({s.role, counted_busy_[s.id]});
    t.staffed_minutes = staffed_minutes();

    metrics::ReportSettings settings{config_.weights, config_.weeks, config_.warmup_weeks};
    out.report = metrics::finalize_report(ledger_, t, settings);
    out.ledger = std::move(ledger_);
    out.customers = std::move(customers_);
    out.staff = desk_.staff();
    return out;
  }

  const ScenarioConfig& config_;
  TraceObserver* observer_;
  std::uint64_t seed_;
  des::RngStream arrivals_;
  des::EventQueue events_;
  queuing::ServiceDesk desk_;
  metrics::Ledger ledger_;
  int days_;

  std::vector<agents::CustomerAgent> customers_;
  std::vector<int> customer_day_;
  std::vector<SimTime> last_exit_;
  std::vector<metrics::WaitRecord> waits_;
  std::vector<double> counted_busy_;
  std::uint64_t in_system_ = 0;
  std::array<std::uint64_t, agents::kOutcomeCount> departures_{};
};

}  // namespace

ReplicationRun simulate(const ScenarioConfig& config, int index, TraceObserver* observer) {
  if (auto violations = validate(config); !violations.empty()) throw ConfigError(std::move(violations));
  return ShopFloor(config, index, observer).run();
}

metrics::KpiReport run_replication(const ScenarioConfig& config, int index, TraceObserver* observer) {
  return simulate(config, index, observer).report;
}

}  // namespace retailsim::scenario
