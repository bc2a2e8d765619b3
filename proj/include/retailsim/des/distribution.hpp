#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "retailsim/des/rng.hpp"

namespace retailsim::des {

struct Exponential {
  double rate = 1.0;  // per minute
};

struct Triangular {
  double min = 0.0;
  double mode = 0.0;
  double max = 0.0;
};

struct Empirical {
  std::vector<std::pair<double, double>> table;  // (value, probability)
};

struct Constant {
  double value = 0.0;  // +inf allowed: "never" (no arrivals, infinite patience)
};

using Distribution = std::variant<Exponential, Triangular, Empirical, Constant>;

/// Draws one value. Parameters are assumed valid; see validate().
double sample(const Distribution& dist, RngStream& stream);

/// Analytic mean.
double mean(const Distribution& dist);

/// Smallest and largest values the distribution can produce.
std::pair<double, double> support(const Distribution& dist);

/// Describes the first parameter problem, or nullopt when valid.
std::optional<std::string> validate(const Distribution& dist);

/// Short human-readable form, e.g. "triangular(3, 8, 20)".
std::string describe(const Distribution& dist);

}  // namespace retailsim::des
