#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "retailsim/agents/roles.hpp"
#include "retailsim/des/distribution.hpp"
#include "retailsim/des/event_queue.hpp"
#include "retailsim/des/rng.hpp"
#include "retailsim/metrics/satisfaction.hpp"

namespace retailsim::agents {

enum class CustomerState : std::uint8_t {
  contemplating,
  browsing,
  waiting_for_help,
  receiving_help,
  waiting_at_till,
  being_served_at_till,
  departed,
};

enum class DepartureOutcome : std::uint8_t {
  purchased = 0,
  left_without_purchase = 1,
  abandoned_help_queue = 2,
  abandoned_till_queue = 3,
};

inline constexpr std::size_t kOutcomeCount = 4;

/// What moved the customer. `assigned` is the synchronous signal from the
/// queuing system; the others arrive as scheduled events.
enum class Trigger : std::uint8_t {
  delay_elapsed,
  assigned,
  patience_expired,
  service_complete,
};

std::string_view to_string(CustomerState state);
std::string_view to_string(DepartureOutcome outcome);
std::string_view to_string(Trigger trigger);

/// Distributions from which each customer's personal attributes are drawn.
/// Probability-valued entries must have support inside [0, 1].
struct PopulationParams {
  des::Distribution browse_time = des::Triangular{2.0, 6.0, 15.0};
  des::Distribution help_need_probability = des::Constant{0.5};
  des::Distribution expert_help_probability = des::Constant{0.1};
  des::Distribution help_patience = des::Triangular{2.0, 5.0, 15.0};
  des::Distribution till_patience = des::Triangular{2.0, 5.0, 15.0};
  des::Distribution purchase_probability = des::Constant{0.5};
  des::Distribution till_after_help_probability = des::Constant{0.7};
};

struct CustomerAttributes {
  double help_need_probability = 0.0;
  double expert_help_probability = 0.0;
  double help_patience = 0.0;
  double till_patience = 0.0;
  double purchase_probability = 0.0;
  double till_after_help_probability = 0.0;
};

/// Private random streams of one customer, one per decision category.
struct CustomerStreams {
  des::RngStream browse;
  des::RngStream help;
  des::RngStream expert;
  des::RngStream purchase;
  des::RngStream after_help;
  des::RngStream service;
};

struct CustomerAgent {
  AgentId id = 0;
  CustomerState state = CustomerState::contemplating;
  std::optional<DepartureOutcome> outcome;
  CustomerAttributes attributes;
  SimTime entry_time = 0.0;
  SimTime exit_time = kNever;
  des::Distribution browse_time = des::Constant{0.0};
  CustomerStreams streams;

  std::optional<RequestKind> open_request;
  SimTime request_time = 0.0;
  std::uint32_t services_received = 0;
};

/// Creates a contemplating customer with attributes drawn from `params` and
/// schedules its first decision at `now`. Streams derive from `seed` and `id`.
CustomerAgent spawn_customer(const PopulationParams& params, AgentId id, std::uint64_t seed,
                             SimTime now, des::EventQueue& events);

/// Side effects the caller must carry out after a transition.
struct TransitionResult {
  CustomerState from = CustomerState::contemplating;
  CustomerState to = CustomerState::contemplating;
  std::optional<double> delay;          // schedule delay_elapsed after this many minutes
  std::optional<RequestKind> request;   // open a service request
  bool release_staff = false;           // customer releases the staff member serving it
  std::optional<metrics::SatisfactionEventKind> satisfaction;
  metrics::ServicePath path = metrics::ServicePath::none;
};

/// Applies one edge of the customer state chart. Illegal (state, trigger)
/// pairs throw ModelError.
TransitionResult transition(CustomerAgent& customer, Trigger trigger, SimTime now);

/// Whether (from, trigger, to) is an edge of the state chart.
bool is_legal_edge(CustomerState from, Trigger trigger, CustomerState to);

}  // namespace retailsim::agents
