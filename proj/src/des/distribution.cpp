#include "retailsim/des/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace retailsim::des {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double sample_triangular(const Triangular& t, double u) {
  const double width = t.max - t.min;
  if (width <= 0.0) return t.min;
  const double left = t.mode - t.min;
  if (u * width < left) return t.min + std::sqrt(u * width * left);
  return t.max - std::sqrt((1.0 - u) * width * (t.max - t.mode));
}

}  // namespace

double sample(const Distribution& dist, RngStream& stream) {
  return std::visit(
      overloaded{
          [&](const Exponential& e) { return -std::log1p(-stream.uniform()) / e.rate; },
          [&](const Triangular& t) { return sample_triangular(t, stream.uniform()); },
          [&](const Empirical& e) {
            const double u = stream.uniform();
            double cumulative = 0.0;
            for (const auto& [value, p] : e.table) {
              cumulative += p;
              if (u < cumulative) return value;
            }
            return e.table.back().first;
          },
          [](const Constant& c) { return c.value; },
      },
      dist);
}

double mean(const Distribution& dist) {
  return std::visit(overloaded{
                        [](const Exponential& e) { return 1.0 / e.rate; },
                        [](const Triangular& t) { return (t.min + t.mode + t.max) / 3.0; },
                        [](const Empirical& e) {
                          double m = 0.0;
                          for (const auto& [value, p] : e.table) m += value * p;
                          return m;
                        },
                        [](const Constant& c) { return c.value; },
                    },
                    dist);
}

std::pair<double, double> support(const Distribution& dist) {
  return std::visit(
      overloaded{
          [](const Exponential&) { return std::pair{0.0, HUGE_VAL}; },
          [](const Triangular& t) { return std::pair{t.min, t.max}; },
          [](const Empirical& e) {
            double lo = HUGE_VAL;
            double hi = -HUGE_VAL;
            for (const auto& [value, p] : e.table) {
              if (p <= 0.0) continue;
              lo = std::min(lo, value);
              hi = std::max(hi, value);
            }
            return std::pair{lo, hi};
          },
          [](const Constant& c) { return std::pair{c.value, c.value}; },
      },
      dist);
}

std::optional<std::string> validate(const Distribution& dist) {
  return std::visit(
      overloaded{
          [](const Exponential& e) -> std::optional<std::string> {
            if (!(e.rate > 0.0) || !std::isfinite(e.rate)) {
              return "exponential rate must be a positive finite number";
            }
            return std::nullopt;
          },
          [](const Triangular& t) -> std::optional<std::string> {
            if (!std::isfinite(t.min) || !std::isfinite(t.mode) || !std::isfinite(t.max)) {
              return "triangular parameters must be finite";
            }
            if (!(t.min <= t.mode && t.mode <= t.max)) {
              return "triangular requires min <= mode <= max";
            }
            return std::nullopt;
          },
          [](const Empirical& e) -> std::optional<std::string> {
            if (e.table.empty()) return "empirical table is empty";
            double total = 0.0;
            for (const auto& [value, p] : e.table) {
              if (!std::isfinite(value)) return "empirical values must be finite";
              if (!(p >= 0.0)) return "empirical probabilities must be >= 0";
              total += p;
            }
            if (std::abs(total - 1.0) > 1e-9) {
              std::ostringstream out;
              out.precision(12);
              out << "empirical probabilities sum to " << total << ", expected 1";
              return out.str();
            }
            return std::nullopt;
          },
          [](const Constant& c) -> std::optional<std::string> {
            if (std::isnan(c.value)) return "constant value is NaN";
            return std::nullopt;
          },
      },
      dist);
}

std::string describe(const Distribution& dist) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const Exponential& e) { out << "exponential(rate=" << e.rate << ")"; },
                 [&](const Triangular& t) {
                   out << "triangular(" << t.min << ", " << t.mode << ", " << t.max << ")";
                 },
                 [&](const Empirical& e) {
                   out << "empirical{";
                   for (std::size_t i = 0; i < e.table.size(); ++i) {
                     if (i) out << ", ";
                     out << "(" << e.table[i].first << ", " << e.table[i].second << ")";
                   }
                   out << "}";
                 },
                 [&](const Constant& c) { out << "constant(" << c.value << ")"; },
             },
             dist);
  return out.str();
}

}  // namespace retailsim::des
