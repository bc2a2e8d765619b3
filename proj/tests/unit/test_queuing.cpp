#include <doctest.h>

#include <map>
#include <variant>

#include "retailsim/queuing/service_desk.hpp"
#include "retailsim/queuing/service_queue.hpp"

using namespace retailsim;
using namespace retailsim::queuing;
using agents::StaffAgent;

namespace {

std::vector<StaffAgent> roster(std::initializer_list<StaffRole> roles) {
  std::vector<StaffAgent> out;
  for (auto r : roles) out.push_back(StaffAgent{.id = static_cast<AgentId>(out.size()), .role = r});
  return out;
}

agents::ServiceTimes fixed_times(double minutes) {
  return {des::Constant{minutes}, des::Constant{minutes}, des::Constant{minutes}};
}

struct Streams {
  std::map<AgentId, des::RngStream> by_customer;
  des::RngStream& operator()(AgentId c) { return by_customer.try_emplace(c, 1, c).first->second; }
  StreamLookup lookup() {
    return [this](AgentId c) -> des::RngStream& { return (*this)(c); };
  }
};

}  // namespace

TEST_CASE("free qualified staff are assigned at once") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  auto out = desk.request_service(10, RequestKind::till, 0.0, 5.0, s(10), q);
  REQUIRE(std::holds_alternative<Assignment>(out));
  const auto& a = std::get<Assignment>(out);
  CHECK(a.staff == 0);
  CHECK(a.wait() == 0.0);
  CHECK(a.completion.time == 2.0);
  CHECK(desk.tills_busy() == 1);
  CHECK(q.pending() == 1);  // completion only, no patience event
}

TEST_CASE("busy staff means the request waits with a deadline") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  desk.request_service(1, RequestKind::till, 0.0, 5.0, s(1), q);
  auto out = desk.request_service(2, RequestKind::till, 0.0, 5.0, s(2), q);
  REQUIRE(std::holds_alternative<Enqueued>(out));
  CHECK(std::get<Enqueued>(out).deadline == 5.0);
  CHECK(desk.queue(RequestKind::till).size() == 1);
  CHECK(q.pending() == 2);
  CHECK_THROWS_AS(desk.request_service(2, RequestKind::till, 0.0, 5.0, s(2), q), ModelError);
}

TEST_CASE("infinite patience schedules no patience event") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  desk.request_service(1, RequestKind::till, 0.0, kNever, s(1), q);
  desk.request_service(2, RequestKind::till, 0.0, kNever, s(2), q);
  CHECK(q.pending() == 1);
}

TEST_CASE("expert help is not given by a normal seller") {
  ServiceDesk desk(roster({StaffRole::seller_normal}), fixed_times(2.0), QueueRule::fifo, 0);
  des::EventQueue q;
  Streams s;
  auto out = desk.request_service(1, RequestKind::help_expert, 0.0, 5.0, s(1), q);
  CHECK(std::holds_alternative<Enqueued>(out));
  auto normal = desk.request_service(2, RequestKind::help_normal, 0.0, 5.0, s(2), q);
  CHECK(std::holds_alternative<Assignment>(normal));
}

TEST_CASE("freed cashier ignores help queues") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  desk.request_service(1, RequestKind::till, 0.0, 5.0, s(1), q);
  desk.request_service(2, RequestKind::help_normal, 0.0, 5.0, s(2), q);
  auto started = desk.release(0, 2.0, s.lookup(), q);
  CHECK(started.empty());
  CHECK(desk.queue(RequestKind::help_normal).size() == 1);
  CHECK(desk.tills_busy() == 0);
}

TEST_CASE("till service needs a free till") {
  // Two sellers but one till: the second till customer waits.
  ServiceDesk desk(roster({StaffRole::seller_normal, StaffRole::seller_normal}), fixed_times(2.0),
                   QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  CHECK(std::holds_alternative<Assignment>(desk.request_service(1, RequestKind::till, 0.0, 5.0, s(1), q)));
  CHECK(std::holds_alternative<Enqueued>(desk.request_service(2, RequestKind::till, 0.0, 5.0, s(2), q)));
  CHECK(std::holds_alternative<Assignment>(desk.request_service(3, RequestKind::help_normal, 0.0, 5.0, s(3), q)));
}

TEST_CASE("queue rule decides who is served next") {
  for (auto rule : {QueueRule::fifo, QueueRule::lifo}) {
    ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(1.0), rule, 1);
    des::EventQueue q;
    Streams s;
    desk.request_service(100, RequestKind::till, 0.0, kNever, s(100), q);
    for (AgentId c = 1; c <= 3; ++c) desk.request_service(c, RequestKind::till, 0.0, kNever, s(c), q);
    std::vector<AgentId> order;
    double t = 1.0;
    for (int i = 0; i < 3; ++i, t += 1.0) {
      auto started = desk.release(0, t, s.lookup(), q);
      REQUIRE(started.size() == 1);
      order.push_back(started.front().customer);
    }
    if (rule == QueueRule::fifo) CHECK(order == std::vector<AgentId>{1, 2, 3});
    else CHECK(order == std::vector<AgentId>{3, 2, 1});
  }
}

TEST_CASE("shortest deadline first") {
  ServiceQueue queue(RequestKind::till, QueueRule::shortest_deadline_first);
  queue.push({.customer = 1, .enqueued = 0.0, .deadline = 9.0, .token = 1});
  queue.push({.customer = 2, .enqueued = 0.0, .deadline = 4.0, .token = 2});
  queue.push({.customer = 3, .enqueued = 0.0, .deadline = 4.0, .token = 3});
  CHECK(queue.pop_next()->customer == 2);
  CHECK(queue.pop_next()->customer == 3);
  CHECK(queue.pop_next()->customer == 1);
  CHECK_FALSE(queue.pop_next());
}

TEST_CASE("queue rejects duplicates and deadlines before enqueue") {
  ServiceQueue queue(RequestKind::till, QueueRule::fifo);
  queue.push({.customer = 1, .enqueued = 3.0, .deadline = 3.0, .token = 1});
  CHECK_THROWS_AS(queue.push({.customer = 1, .enqueued = 3.0, .deadline = 5.0, .token = 2}), ModelError);
  CHECK_THROWS_AS(queue.push({.customer = 2, .enqueued = 3.0, .deadline = 2.0, .token = 3}), ModelError);
  CHECK_FALSE(queue.remove(1, 99));
  CHECK(queue.remove(1, 1));
  CHECK(queue.empty());
}

TEST_CASE("reneging removes the entry; stale patience events do nothing") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  desk.request_service(1, RequestKind::till, 0.0, 5.0, s(1), q);
  auto two = std::get<Enqueued>(desk.request_service(2, RequestKind::till, 0.0, 5.0, s(2), q));
  auto three = std::get<Enqueued>(desk.request_service(3, RequestKind::till, 0.0, 5.0, s(3), q));

  auto gone = desk.renege(3, three.token, 5.0);
  REQUIRE(gone);
  CHECK(gone->customer == 3);
  CHECK_FALSE(desk.has_open_request(3));

  auto started = desk.release(0, 2.0, s.lookup(), q);
  REQUIRE(started.size() == 1);
  CHECK(started.front().customer == 2);
  CHECK(started.front().wait() == 2.0);
  CHECK_FALSE(desk.renege(2, two.token, 5.0));
}

TEST_CASE("zero patience: everyone who has to wait abandons") {
  ServiceDesk desk(roster({StaffRole::cashier}), fixed_times(2.0), QueueRule::fifo, 1);
  des::EventQueue q;
  Streams s;
  desk.request_service(0, RequestKind::till, 0.0, 0.0, s(0), q);
  for (AgentId c = 1; c <= 5; ++c) desk.request_service(c, RequestKind::till, 0.0, 0.0, s(c), q);
  int reneged = 0;
  while (auto e = q.pop_next()) {
    if (e->kind == des::EventKind::patience_expired) {
      CHECK(e->time == 0.0);
      reneged += desk.renege(e->target, e->token, e->time).has_value();
    }
  }
  CHECK(reneged == 5);
  CHECK(desk.queue(RequestKind::till).empty());
}

TEST_CASE("staff selection: least qualified, then longest idle, then lowest id") {
  auto staff = roster({StaffRole::seller_expert, StaffRole::seller_normal, StaffRole::seller_normal,
                       StaffRole::section_manager, StaffRole::cashier});
  staff[1].idle_since = 10.0;
  staff[2].idle_since = 3.0;
  std::vector<const StaffAgent*> all;
  for (const auto& s : staff) all.push_back(&s);
  CHECK(ServiceDesk::select_staff(all, RequestKind::till) == 4);
  CHECK(ServiceDesk::select_staff(all, RequestKind::help_normal) == 2);
  CHECK(ServiceDesk::select_staff(all, RequestKind::help_expert) == 0);

  staff[2].idle_since = 10.0;
  CHECK(ServiceDesk::select_staff(all, RequestKind::help_normal) == 1);

  std::vector<const StaffAgent*> managers_and_expert{&staff[3], &staff[0]};
  CHECK(ServiceDesk::select_staff(managers_and_expert, RequestKind::help_expert) == 0);

  std::vector<const StaffAgent*> cashier_only{&staff[4]};
  CHECK_THROWS_AS(ServiceDesk::select_staff(cashier_only, RequestKind::help_normal), ModelError);
}
