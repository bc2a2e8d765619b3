#include "retailsim/scenario/config.hpp"

#include <cmath>
#include <sstream>

namespace retailsim::scenario {

int StaffingMix::count(StaffRole role) const {
  switch (role) {
    case StaffRole::cashier: return cashiers;
    case StaffRole::seller_normal: return sellers_normal;
    case StaffRole::seller_expert: return sellers_expert;
    case StaffRole::section_manager: return section_managers;
  }
  return 0;
}

std::string_view preset_name(Department department) {
  return department == Department::audio_tv ? "atv" : "ww";
}

std::optional<Department> parse_department(std::string_view name) {
  if (name == "atv" || name == "A&TV") return Department::audio_tv;
  if (name == "ww" || name == "WW") return Department::womenswear;
  return std::nullopt;
}

ScenarioConfig department_preset(Department department) {
  using des::Constant;
  using des::Exponential;
  using des::Triangular;

  ScenarioConfig c;
  c.preset = std::string(preset_name(department));
  c.schedule = {6, 9.0};
  c.weeks = 10;
  c.warmup_weeks = 1;
  c.customers.till_after_help_probability = Constant{0.7};

  if (department == Department::audio_tv) {
    c.interarrival = Exponential{1.0 / 4.0};
    c.service.help_normal = Triangular{3.0, 8.0, 20.0};
    c.service.help_expert = Triangular{3.0, 8.0, 20.0};
    c.service.till = Triangular{1.0, 2.0, 4.0};
    c.customers.browse_time = Triangular{2.0, 6.0, 15.0};
    c.customers.help_need_probability = Constant{0.6};
    c.customers.expert_help_probability = Constant{0.10};
    c.customers.purchase_probability = Constant{0.5};
    c.customers.help_patience = Triangular{2.0, 5.0, 15.0};
    c.customers.till_patience = Triangular{2.0, 5.0, 15.0};
    c.staffing = {3, 5, 2, 2, std::nullopt};
  } else {
    c.interarrival = Exponential{1.0 / 1.5};
    c.service.help_normal = Triangular{1.0, 3.0, 8.0};
    c.service.help_expert = Triangular{1.0, 3.0, 8.0};
    c.service.till = Triangular{0.5, 1.5, 3.0};
    c.customers.browse_time = Triangular{2.0, 6.0, 15.0};
    c.customers.help_need_probability = Constant{0.25};
    c.customers.expert_help_probability = Constant{0.05};
    c.customers.purchase_probability = Constant{0.6};
    c.customers.help_patience = Triangular{2.0, 5.0, 15.0};
    c.customers.till_patience = Triangular{2.0, 5.0, 15.0};
    c.staffing = {4, 5, 1, 1, std::nullopt};
  }
  return c;
}

namespace {

struct Checker {
  std::vector<std::string> out;

  void fail(std::string_view field, std::string_view message) {
    std::string line(field);
    line += ": ";
    line += message;
    out.push_back(std::move(line));
  }

  // Valid distribution with values in [lo, hi]. `allow_infinite` permits a
  // Constant(+inf) "never" value.
  void dist(std::string_view field, const des::Distribution& d, double lo, double hi,
            bool allow_infinite) {
    if (auto err = des::validate(d)) {
      fail(field, *err);
      return;
    }
    auto [min, max] = des::support(d);
    if (min < lo || max > hi) {
      if (!(allow_infinite && std::holds_alternative<des::Constant>(d) && std::isinf(max) && max > 0)) {
        std::ostringstream msg;
        msg << "values must lie in [" << lo << ", " << hi << "], got " << des::describe(d);
        fail(field, msg.str());
      }
    }
    if (!allow_infinite && std::holds_alternative<des::Constant>(d) && !std::isfinite(max)) {
      fail(field, "value must be finite");
    }
  }

  void probability(std::string_view field, const des::Distribution& d) {
    dist(field, d, 0.0, 1.0, false);
  }
};

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& c) {
  Checker v;
  constexpr double inf = HUGE_VAL;

  if (c.weeks <= 0) v.fail("weeks", "run length must be positive");
  if (c.warmup_weeks < 0) v.fail("warmup_weeks", "must be >= 0");
  if (c.weeks > 0 && c.warmup_weeks >= c.weeks) v.fail("warmup_weeks", "must be less than weeks");
  if (c.schedule.days_per_week < 1 || c.schedule.days_per_week > 7) {
    v.fail("schedule.days_per_week", "must be between 1 and 7");
  }
  if (!(c.schedule.hours_per_day > 0.0 && c.schedule.hours_per_day <= 24.0)) {
    v.fail("schedule.hours_per_day", "must be in (0, 24]");
  }
  if (c.replications < 1) v.fail("replications", "must be >= 1");

  v.dist("arrivals", c.interarrival, 0.0, inf, true);
  if (des::validate(c.interarrival) == std::nullopt && std::holds_alternative<des::Constant>(c.interarrival) &&
      std::get<des::Constant>(c.interarrival).value == 0.0) {
    v.fail("arrivals", "constant inter-arrival time of 0 would never advance the clock");
  }

  const auto& s = c.staffing;
  if (s.cashiers < 0) v.fail("staffing.cashiers", "must be >= 0");
  if (s.sellers_normal < 0) v.fail("staffing.sellers_normal", "must be >= 0");
  if (s.sellers_expert < 0) v.fail("staffing.sellers_expert", "must be >= 0");
  if (s.section_managers < 0) v.fail("staffing.section_managers", "must be >= 0");
  if (s.tills && *s.tills < 0) v.fail("staffing.tills", "must be >= 0");
  if (s.total() <= 0) v.fail("staffing", "total staff must be positive");

  v.dist("service.till", c.service.till, 0.0, inf, false);
  v.dist("service.help_normal", c.service.help_normal, 0.0, inf, false);
  v.dist("service.help_expert", c.service.help_expert, 0.0, inf, false);

  const auto& p = c.customers;
  v.dist("customers.browse_time", p.browse_time, 0.0, inf, false);
  v.probability("customers.help_need_probability", p.help_need_probability);
  v.probability("customers.expert_help_probability", p.expert_help_probability);
  v.probability("customers.purchase_probability", p.purchase_probability);
  v.probability("customers.till_after_help_probability", p.till_after_help_probability);
  v.dist("customers.help_patience", p.help_patience, 0.0, inf, true);
  v.dist("customers.till_patience", p.till_patience, 0.0, inf, true);

  if (auto err = c.weights.validate()) v.fail("weights", *err);

  // A request nobody can serve, from a customer who never gives up, would
  // leave the customer in the shop forever.
  if (v.out.empty()) {
    auto reachable = [](const des::Distribution& d) { return des::support(d).second > 0.0; };
    auto never_leaves = [](const des::Distribution& d) { return std::isinf(des::support(d).second); };
    const bool help = reachable(p.help_need_probability);
    const bool expert = help && reachable(p.expert_help_probability);
    const bool till = reachable(p.purchase_probability) ||
                      (help && reachable(p.till_after_help_probability));
    auto servable = [&](RequestKind kind) {
      for (auto role : kAllStaffRoles) {
        if (s.count(role) > 0 && agents::qualified(role, kind)) {
          return kind != RequestKind::till || s.open_tills() > 0;
        }
      }
      return false;
    };
    if (till && never_leaves(p.till_patience) && !servable(RequestKind::till)) {
      v.fail("staffing", "till requests occur with infinite patience but no till can be staffed");
    }
    if (help && never_leaves(p.help_patience) && !servable(RequestKind::help_normal)) {
      v.fail("staffing", "help requests occur with infinite patience but nobody can give help");
    }
    if (expert && never_leaves(p.help_patience) && !servable(RequestKind::help_expert)) {
      v.fail("staffing", "expert requests occur with infinite patience but nobody is qualified");
    }
  }
  return v.out;
}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string msg = "invalid scenario:";
  for (const auto& v : violations) {
    msg += "\n  ";
    msg += v;
  }
  return msg;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace retailsim::scenario
