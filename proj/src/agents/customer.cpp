#include "retailsim/agents/customer.hpp"

#include <string>

namespace retailsim::agents {

using metrics::SatisfactionEventKind;
using metrics::ServicePath;

std::string_view to_string(CustomerState state) {
  switch (state) {
    case CustomerState::contemplating: return "contemplating";
    case CustomerState::browsing: return "browsing";
    case CustomerState::waiting_for_help: return "waiting_for_help";
    case CustomerState::receiving_help: return "receiving_help";
    case CustomerState::waiting_at_till: return "waiting_at_till";
    case CustomerState::being_served_at_till: return "being_served_at_till";
    case CustomerState::departed: return "departed";
  }
  return "unknown";
}

std::string_view to_string(DepartureOutcome outcome) {
  switch (outcome) {
    case DepartureOutcome::purchased: return "purchased";
    case DepartureOutcome::left_without_purchase: return "left_without_purchase";
    case DepartureOutcome::abandoned_help_queue: return "abandoned_help_queue";
    case DepartureOutcome::abandoned_till_queue: return "abandoned_till_queue";
  }
  return "unknown";
}

std::string_view to_string(Trigger trigger) {
  switch (trigger) {
    case Trigger::delay_elapsed: return "delay_elapsed";
    case Trigger::assigned: return "assigned";
    case Trigger::patience_expired: return "patience_expired";
    case Trigger::service_complete: return "service_complete";
  }
  return "unknown";
}

CustomerAgent spawn_customer(const PopulationParams& params, AgentId id, std::uint64_t seed,
                             SimTime now, des::EventQueue& events) {
  using des::Category;
  using des::Population;
  auto stream = [&](Category c) { return des::RngStream(seed, des::stream_id(Population::customer, c, id)); };

  CustomerAgent c;
  c.id = id;
  c.entry_time = now;
  c.browse_time = params.browse_time;
  c.streams = {stream(Category::browse_delay),      stream(Category::help_decision),
               stream(Category::expert_decision),   stream(Category::purchase_decision),
               stream(Category::after_help_decision), stream(Category::service_time)};

  // Fixed draw order keeps attributes identical across experiment arms.
  auto attributes = stream(Category::attributes);
  c.attributes.help_need_probability = des::sample(params.help_need_probability, attributes);
  c.attributes.expert_help_probability = des::sample(params.expert_help_probability, attributes);
  c.attributes.help_patience = des::sample(params.help_patience, attributes);
  c.attributes.till_patience = des::sample(params.till_patience, attributes);
  c.attributes.purchase_probability = des::sample(params.purchase_probability, attributes);
  c.attributes.till_after_help_probability =
      des::sample(params.till_after_help_probability, attributes);

  events.schedule({now, 0, id, des::EventKind::delay_elapsed, 0});
  return c;
}

namespace {

[[noreturn]] void illegal(const CustomerAgent& c, Trigger trigger) {
  throw ModelError("customer " + std::to_string(c.id) + ": trigger '" +
                   std::string(to_string(trigger)) + "' is illegal in state '" +
                   std::string(to_string(c.state)) + "'");
}

void depart(CustomerAgent& c, DepartureOutcome outcome, SimTime now) {
  c.state = CustomerState::departed;
  c.outcome = outcome;
  c.exit_time = now;
  c.open_request.reset();
}

void open(CustomerAgent& c, RequestKind kind, SimTime now, TransitionResult& r) {
  c.state = kind == RequestKind::till ? CustomerState::waiting_at_till
                                      : CustomerState::waiting_for_help;
  c.open_request = kind;
  c.request_time = now;
  r.request = kind;
}

SatisfactionEventKind served_kind(const CustomerAgent& c, SimTime now) {
  return now > c.request_time ? SatisfactionEventKind::served_after_wait
                              : SatisfactionEventKind::served_immediately;
}

}  // namespace

TransitionResult transition(CustomerAgent& c, Trigger trigger, SimTime now) {
  TransitionResult r;
  r.from = c.state;

  switch (c.state) {
    case CustomerState::contemplating:
      if (trigger != Trigger::delay_elapsed) illegal(c, trigger);
      c.state = CustomerState::browsing;
      r.delay = des::sample(c.browse_time, c.streams.browse);
      break;

    case CustomerState::browsing:
      if (trigger != Trigger::delay_elapsed) illegal(c, trigger);
      if (des::bernoulli(c.attributes.help_need_probability, c.streams.help)) {
        const bool expert = des::bernoulli(c.attributes.expert_help_probability, c.streams.expert);
        open(c, expert ? RequestKind::help_expert : RequestKind::help_normal, now, r);
      } else if (des::bernoulli(c.attributes.purchase_probability, c.streams.purchase)) {
        open(c, RequestKind::till, now, r);
      } else {
        depart(c, DepartureOutcome::left_without_purchase, now);
        r.satisfaction = SatisfactionEventKind::left_without_purchase;
      }
      break;

    case CustomerState::waiting_for_help:
      if (trigger == Trigger::assigned) {
        c.state = CustomerState::receiving_help;
        r.satisfaction = served_kind(c, now);
        r.path = ServicePath::help;
        ++c.services_received;
      } else if (trigger == Trigger::patience_expired) {
        depart(c, DepartureOutcome::abandoned_help_queue, now);
        r.satisfaction = SatisfactionEventKind::help_abandoned;
        r.path = ServicePath::help;
      } else {
        illegal(c, trigger);
      }
      break;

    case CustomerState::receiving_help:
      if (trigger != Trigger::service_complete) illegal(c, trigger);
      r.release_staff = true;
      c.open_request.reset();
      if (des::bernoulli(c.attributes.till_after_help_probability, c.streams.after_help)) {
        open(c, RequestKind::till, now, r);
      } else {
        c.state = CustomerState::browsing;
        r.delay = des::sample(c.browse_time, c.streams.browse);
      }
      break;

    case CustomerState::waiting_at_till:
      if (trigger == Trigger::assigned) {
        c.state = CustomerState::being_served_at_till;
        r.satisfaction = served_kind(c, now);
        r.path = ServicePath::till;
        ++c.services_received;
      } else if (trigger == Trigger::patience_expired) {
        depart(c, DepartureOutcome::abandoned_till_queue, now);
        r.satisfaction = SatisfactionEventKind::till_abandoned;
        r.path = ServicePath::till;
      } else {
        illegal(c, trigger);
      }
      break;

    case CustomerState::being_served_at_till:
      if (trigger != Trigger::service_complete) illegal(c, trigger);
      r.release_staff = true;
      depart(c, DepartureOutcome::purchased, now);
      r.satisfaction = SatisfactionEventKind::purchase_completed;
      r.path = ServicePath::till;
      break;

    case CustomerState::departed:
      illegal(c, trigger);
  }

  r.to = c.state;
  return r;
}

bool is_legal_edge(CustomerState from, Trigger trigger, CustomerState to) {
  using S = CustomerState;
  using T = Trigger;
  switch (from) {
    case S::contemplating: return trigger == T::delay_elapsed && to == S::browsing;
    case S::browsing:
      return trigger == T::delay_elapsed &&
             (to == S::waiting_for_help || to == S::waiting_at_till || to == S::departed);
    case S::waiting_for_help:
      return (trigger == T::assigned && to == S::receiving_help) ||
             (trigger == T::patience_expired && to == S::departed);
    case S::receiving_help:
      return trigger == T::service_complete && (to == S::browsing || to == S::waiting_at_till);
    case S::waiting_at_till:
      return (trigger == T::assigned && to == S::being_served_at_till) ||
             (trigger == T::patience_expired && to == S::departed);
    case S::being_served_at_till: return trigger == T::service_complete && to == S::departed;
    case S::departed: return false;
  }
  return false;
}

}  // namespace retailsim::agents
