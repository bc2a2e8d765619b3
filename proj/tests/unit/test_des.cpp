#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "retailsim/des/distribution.hpp"
#include "retailsim/des/event_queue.hpp"
#include "retailsim/des/rng.hpp"

using namespace retailsim;
using namespace retailsim::des;

namespace {

double sample_mean(const Distribution& d, int n, std::uint64_t seed = 7) {
  RngStream s(seed, 1);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample(d, s);
  return sum / n;
}

}  // namespace

TEST_CASE("event queue dispatches by time") {
  EventQueue q;
  q.schedule({5.0, 0, 1, EventKind::arrival, 0});
  q.schedule({1.0, 0, 2, EventKind::arrival, 0});
  q.schedule({3.0, 0, 3, EventKind::arrival, 0});
  std::vector<AgentId> order;
  while (auto e = q.pop_next()) order.push_back(e->target);
  CHECK(order == std::vector<AgentId>{2, 3, 1});
  CHECK(q.now() == 5.0);
}

TEST_CASE("equal times dispatch in scheduling order") {
  EventQueue q;
  for (AgentId i = 0; i < 50; ++i) q.schedule({2.0, 0, i, EventKind::delay_elapsed, 0});
  for (AgentId i = 0; i < 50; ++i) CHECK(q.pop_next()->target == i);
}

TEST_CASE("scheduling into the past throws") {
  EventQueue q;
  q.schedule({10.0, 0, 0, EventKind::arrival, 0});
  q.pop_next();
  CHECK_THROWS_AS(q.schedule({9.5, 0, 0, EventKind::arrival, 0}), ModelError);
  CHECK_THROWS_AS(q.schedule({std::nan(""), 0, 0, EventKind::arrival, 0}), ModelError);
  CHECK_NOTHROW(q.schedule({10.0, 0, 0, EventKind::arrival, 0}));
}

TEST_CASE("empty queue pops nothing") {
  EventQueue q;
  CHECK(q.empty());
  CHECK_FALSE(q.pop_next().has_value());
}

TEST_CASE("cancelled events are skipped") {
  EventQueue q;
  auto a = q.schedule({1.0, 0, 1, EventKind::patience_expired, 0});
  q.schedule({2.0, 0, 2, EventKind::arrival, 0});
  CHECK(q.cancel(a));
  CHECK_FALSE(q.cancel(a));
  CHECK(q.pending() == 1);
  CHECK(q.pop_next()->target == 2);
  CHECK(q.empty());
  CHECK_FALSE(q.cancel(12345));
}

TEST_CASE("random schedules come out sorted like a stable sort") {
  RngStream s(99, 0);
  EventQueue q;
  struct Item {
    double time;
    AgentId id;
  };
  std::vector<Item> items;
  for (AgentId i = 0; i < 10'000; ++i) {
    // coarse grid so that ties are common
    const double t = std::floor(s.uniform() * 500.0) / 4.0;
    items.push_back({t, i});
    q.schedule({t, 0, i, EventKind::arrival, 0});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.time < b.time; });
  for (const auto& it : items) {
    auto e = q.pop_next();
    REQUIRE(e);
    CHECK(e->target == it.id);
    CHECK(e->time == it.time);
  }
  CHECK(q.empty());
}

TEST_CASE("constant distribution") {
  RngStream s(1, 1);
  CHECK(sample(Constant{3.5}, s) == 3.5);
  CHECK(std::isinf(sample(Constant{kNever}, s)));
  CHECK(mean(Constant{3.5}) == 3.5);
}

TEST_CASE("exponential mean") {
  const double m = sample_mean(Exponential{0.25}, 200'000);
  CHECK(m == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("triangular mean") {
  const double expected = oracle::triangular_mean(2, 5, 15);
  CHECK(sample_mean(Triangular{2, 5, 15}, 200'000) == doctest::Approx(expected).epsilon(0.02));
  CHECK(mean(Triangular{2, 5, 15}) == doctest::Approx(22.0 / 3.0));
  RngStream s(3, 3);
  for (int i = 0; i < 10'000; ++i) {
    const double v = sample(Triangular{2, 5, 15}, s);
    CHECK((v >= 2.0 && v <= 15.0));
  }
}

TEST_CASE("empirical frequencies") {
  const Empirical table{{{1.0, 0.2}, {2.0, 0.5}, {7.0, 0.3}}};
  RngStream s(11, 2);
  std::map<double, int> counts;
  const int n = 200'000;
  for (int i = 0; i < n; ++i) ++counts[sample(table, s)];
  CHECK(counts.size() == 3);
  CHECK(std::abs(counts[1.0] / double(n) - 0.2) < 0.01);
  CHECK(std::abs(counts[2.0] / double(n) - 0.5) < 0.01);
  CHECK(std::abs(counts[7.0] / double(n) - 0.3) < 0.01);
}

TEST_CASE("distribution validation") {
  CHECK_FALSE(validate(Exponential{0.5}).has_value());
  CHECK(validate(Exponential{0.0}).has_value());
  CHECK(validate(Triangular{5, 2, 10}).has_value());
  CHECK(validate(Empirical{{{1.0, 0.5}, {2.0, 0.4}}}).has_value());
  CHECK(validate(Empirical{{{1.0, -0.1}, {2.0, 1.1}}}).has_value());
  CHECK_FALSE(validate(Empirical{{{1.0, 0.5}, {2.0, 0.5}}}).has_value());
}

TEST_CASE("bernoulli") {
  RngStream s(5, 5);
  int hits = 0;
  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(bernoulli(0.0, s));
    CHECK(bernoulli(1.0, s));
  }
  const int n = 100'000;
  for (int i = 0; i < n; ++i) hits += bernoulli(0.1, s);
  const double f = hits / double(n);
  CHECK(f >= 0.094);
  CHECK(f <= 0.106);
}

TEST_CASE("streams are reproducible and independent") {
  RngStream a(42, stream_id(Population::customer, Category::browse_delay, 3));
  RngStream b(42, stream_id(Population::customer, Category::browse_delay, 3));
  RngStream c(42, stream_id(Population::customer, Category::browse_delay, 4));
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differs |= x != c.next_u64();
  }
  CHECK(differs);
  CHECK(replication_seed(1, 0) != replication_seed(1, 1));
  CHECK(replication_seed(1, 0) == replication_seed(1, 0));
}
