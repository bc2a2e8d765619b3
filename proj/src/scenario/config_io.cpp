#include "retailsim/scenario/config_io.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace retailsim::scenario {

namespace {

class Reader {
public:
  std::vector<std::string> errors;

  void fail(const std::string& field, const std::string& message) {
    errors.push_back(field + ": " + message);
  }

  // Reports keys of `node` that are not in `allowed`.
  void known_keys(const YAML::Node& node, const std::string& prefix,
                  std::initializer_list<std::string_view> allowed) {
    if (!node.IsMap()) {
      fail(prefix.empty() ? "<document>" : prefix, "expected a mapping");
      return;
    }
    const std::set<std::string_view> keys(allowed);
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!keys.contains(key)) fail(join(prefix, key), "unknown key");
    }
  }

  static std::string join(const std::string& prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
  }

  template <class T>
  void scalar(const YAML::Node& parent, std::string_view key, const std::string& prefix, T& out) {
    const auto node = parent[std::string(key)];
    if (!node) return;
    try {
      out = node.as<T>();
    } catch (const YAML::Exception&) {
      fail(join(prefix, key), "malformed value");
    }
  }

  void number(const YAML::Node& node, const std::string& field, double& out) {
    try {
      out = node.as<double>();
    } catch (const YAML::Exception&) {
      fail(field, "expected a number");
    }
  }

  void distribution(const YAML::Node& parent, std::string_view key, const std::string& prefix,
                    des::Distribution& out) {
    const auto node = parent[std::string(key)];
    if (!node) return;
    const auto field = join(prefix, key);
    if (node.IsScalar()) {
      double v = 0.0;
      number(node, field, v);
      out = des::Constant{v};
      return;
    }
    if (!node.IsMap() || !node["type"]) {
      fail(field, "expected a number or a mapping with 'type'");
      return;
    }
    const auto type = node["type"].as<std::string>();
    if (type == "exponential") {
      known_keys(node, field, {"type", "rate", "mean"});
      if (static_cast<bool>(node["rate"]) == static_cast<bool>(node["mean"])) {
        fail(field, "exponential needs exactly one of 'rate' or 'mean'");
        return;
      }
      double v = 0.0;
      if (node["rate"]) {
        number(node["rate"], field + ".rate", v);
        out = des::Exponential{v};
      } else {
        number(node["mean"], field + ".mean", v);
        out = des::Exponential{v > 0.0 ? 1.0 / v : 0.0};
      }
    } else if (type == "triangular") {
      known_keys(node, field, {"type", "min", "mode", "max"});
      des::Triangular t;
      for (auto [name, slot] : {std::pair{"min", &t.min}, {"mode", &t.mode}, {"max", &t.max}}) {
        if (!node[name]) fail(field, std::string("triangular needs '") + name + "'");
        else number(node[name], field + "." + name, *slot);
      }
      out = t;
    } else if (type == "empirical") {
      known_keys(node, field, {"type", "table"});
      des::Empirical e;
      const auto table = node["table"];
      if (!table || !table.IsSequence()) {
        fail(field, "empirical needs a 'table' of [value, probability] pairs");
        return;
      }
      for (const auto& row : table) {
        if (!row.IsSequence() || row.size() != 2) {
          fail(field + ".table", "each row must be [value, probability]");
          return;
        }
        double value = 0.0;
        double p = 0.0;
        number(row[0], field + ".table", value);
        number(row[1], field + ".table", p);
        e.table.emplace_back(value, p);
      }
      out = e;
    } else if (type == "constant") {
      known_keys(node, field, {"type", "value"});
      double v = 0.0;
      if (!node["value"]) fail(field, "constant needs 'value'");
      else number(node["value"], field + ".value", v);
      out = des::Constant{v};
    } else {
      fail(field, "unknown distribution type '" + type + "'");
    }
  }
};

}  // namespace

ScenarioConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError({std::string("<document>: ") + e.what()});
  }
  if (!root || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);

  Reader in;
  ScenarioConfig c;
  in.known_keys(root, "",
                {"preset", "schedule", "weeks", "warmup_weeks", "arrivals", "staffing", "service",
                 "customers", "weights", "queue_rule", "seed", "replications"});
  if (!in.errors.empty() && !root.IsMap()) throw ConfigError(in.errors);

  if (root["preset"]) {
    const auto name = root["preset"].as<std::string>();
    if (auto dept = parse_department(name)) c = department_preset(*dept);
    else in.fail("preset", "unknown preset '" + name + "' (expected atv or ww)");
  }

  if (auto s = root["schedule"]) {
    in.known_keys(s, "schedule", {"days_per_week", "hours_per_day"});
    in.scalar(s, "days_per_week", "schedule", c.schedule.days_per_week);
    in.scalar(s, "hours_per_day", "schedule", c.schedule.hours_per_day);
  }
  in.scalar(root, "weeks", "", c.weeks);
  in.scalar(root, "warmup_weeks", "", c.warmup_weeks);
  in.distribution(root, "arrivals", "", c.interarrival);

  if (auto s = root["staffing"]) {
    in.known_keys(s, "staffing", {"cashiers", "sellers_normal", "sellers_expert", "section_managers", "tills"});
    in.scalar(s, "cashiers", "staffing", c.staffing.cashiers);
    in.scalar(s, "sellers_normal", "staffing", c.staffing.sellers_normal);
    in.scalar(s, "sellers_expert", "staffing", c.staffing.sellers_expert);
    in.scalar(s, "section_managers", "staffing", c.staffing.section_managers);
    if (s["tills"]) {
      int tills = 0;
      in.scalar(s, "tills", "staffing", tills);
      c.staffing.tills = tills;
    }
  }
  if (auto s = root["service"]) {
    in.known_keys(s, "service", {"till", "help_normal", "help_expert"});
    in.distribution(s, "till", "service", c.service.till);
    in.distribution(s, "help_normal", "service", c.service.help_normal);
    in.distribution(s, "help_expert", "service", c.service.help_expert);
  }
  if (auto s = root["customers"]) {
    in.known_keys(s, "customers",
                  {"browse_time", "help_need_probability", "expert_help_probability", "help_patience",
                   "till_patience", "purchase_probability", "till_after_help_probability"});
    auto& p = c.customers;
    in.distribution(s, "browse_time", "customers", p.browse_time);
    in.distribution(s, "help_need_probability", "customers", p.help_need_probability);
    in.distribution(s, "expert_help_probability", "customers", p.expert_help_probability);
    in.distribution(s, "help_patience", "customers", p.help_patience);
    in.distribution(s, "till_patience", "customers", p.till_patience);
    in.distribution(s, "purchase_probability", "customers", p.purchase_probability);
    in.distribution(s, "till_after_help_probability", "customers", p.till_after_help_probability);
  }
  if (auto s = root["weights"]) {
    if (!s.IsMap()) {
      in.fail("weights", "expected a mapping");
    } else {
      for (const auto& kv : s) {
        const auto key = kv.first.as<std::string>();
        if (auto kind = metrics::parse_satisfaction_kind(key)) in.number(kv.second, "weights." + key, c.weights[*kind]);
        else in.fail("weights." + key, "unknown key");
      }
    }
  }
  if (auto q = root["queue_rule"]) {
    const auto name = q.as<std::string>();
    if (auto rule = queuing::parse_queue_rule(name)) c.queue_rule = *rule;
    else in.fail("queue_rule", "unknown rule '" + name + "' (expected fifo, lifo or shortest_deadline_first)");
  }
  in.scalar(root, "seed", "", c.seed);
  in.scalar(root, "replications", "", c.replications);

  auto violations = std::move(in.errors);
  // Fields that failed to parse keep their defaults, so validating the rest
  // still reports every remaining problem in one pass.
  for (auto& v : validate(c)) violations.push_back(std::move(v));
  if (!violations.empty()) throw ConfigError(std::move(violations));
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read scenario file " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config(text.str());
}

namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? ".inf" : "-.inf";
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void emit(YAML::Emitter& out, const des::Distribution& d) {
  out << YAML::Flow << YAML::BeginMap;
  if (const auto* e = std::get_if<des::Exponential>(&d)) {
    out << YAML::Key << "type" << YAML::Value << "exponential" << YAML::Key << "rate" << YAML::Value << num(e->rate);
  } else if (const auto* t = std::get_if<des::Triangular>(&d)) {
    out << YAML::Key << "type" << YAML::Value << "triangular" << YAML::Key << "min" << YAML::Value << num(t->min)
        << YAML::Key << "mode" << YAML::Value << num(t->mode) << YAML::Key << "max" << YAML::Value << num(t->max);
  } else if (const auto* em = std::get_if<des::Empirical>(&d)) {
    out << YAML::Key << "type" << YAML::Value << "empirical" << YAML::Key << "table" << YAML::Value
        << YAML::BeginSeq;
    for (const auto& [v, p] : em->table) out << YAML::Flow << YAML::BeginSeq << num(v) << num(p) << YAML::EndSeq;
    out << YAML::EndSeq;
  } else {
    out << YAML::Key << "type" << YAML::Value << "constant" << YAML::Key << "value" << YAML::Value
        << num(std::get<des::Constant>(d).value);
  }
  out << YAML::EndMap;
}

}  // namespace

std::string to_yaml(const ScenarioConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  if (!c.preset.empty()) out << YAML::Key << "preset" << YAML::Value << c.preset;
  out << YAML::Key << "schedule" << YAML::Value << YAML::BeginMap << YAML::Key << "days_per_week" << YAML::Value
      << c.schedule.days_per_week << YAML::Key << "hours_per_day" << YAML::Value << num(c.schedule.hours_per_day)
      << YAML::EndMap;
  out << YAML::Key << "weeks" << YAML::Value << c.weeks;
  out << YAML::Key << "warmup_weeks" << YAML::Value << c.warmup_weeks;
  out << YAML::Key << "arrivals" << YAML::Value;
  emit(out, c.interarrival);

  out << YAML::Key << "staffing" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "cashiers" << YAML::Value << c.staffing.cashiers;
  out << YAML::Key << "sellers_normal" << YAML::Value << c.staffing.sellers_normal;
  out << YAML::Key << "sellers_expert" << YAML::Value << c.staffing.sellers_expert;
  out << YAML::Key << "section_managers" << YAML::Value << c.staffing.section_managers;
  if (c.staffing.tills) out << YAML::Key << "tills" << YAML::Value << *c.staffing.tills;
  out << YAML::EndMap;

  out << YAML::Key << "service" << YAML::Value << YAML::BeginMap;
  for (auto kind : kAllRequestKinds) {
    out << YAML::Key << std::string(to_string(kind)) << YAML::Value;
    emit(out, c.service.for_kind(kind));
  }
  out << YAML::EndMap;

  const auto& p = c.customers;
  out << YAML::Key << "customers" << YAML::Value << YAML::BeginMap;
  for (auto [name, dist] : {std::pair<const char*, const des::Distribution*>{"browse_time", &p.browse_time},
                            {"help_need_probability", &p.help_need_probability},
                            {"expert_help_probability", &p.expert_help_probability},
                            {"help_patience", &p.help_patience},
                            {"till_patience", &p.till_patience},
                            {"purchase_probability", &p.purchase_probability},
                            {"till_after_help_probability", &p.till_after_help_probability}}) {
    out << YAML::Key << name << YAML::Value;
    emit(out, *dist);
  }
  out << YAML::EndMap;

  out << YAML::Key << "weights" << YAML::Value << YAML::BeginMap;
  for (auto kind : metrics::kAllSatisfactionKinds) {
    out << YAML::Key << std::string(metrics::to_string(kind)) << YAML::Value << num(c.weights[kind]);
  }
  out << YAML::EndMap;
  out << YAML::Key << "queue_rule" << YAML::Value << std::string(queuing::to_string(c.queue_rule));
  out << YAML::Key << "seed" << YAML::Value << c.seed;
  out << YAML::Key << "replications" << YAML::Value << c.replications;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace retailsim::scenario
