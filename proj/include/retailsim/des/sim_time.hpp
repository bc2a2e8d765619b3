#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace retailsim {

/// Simulated minutes since scenario start.
using SimTime = double;

inline constexpr SimTime kNever = std::numeric_limits<double>::infinity();

inline constexpr double kMinutesPerDay = 24.0 * 60.0;
inline constexpr double kMinutesPerWeek = 7.0 * kMinutesPerDay;

/// Raised when the model breaks one of its own contracts (scheduling into the
/// past, illegal state transition, double release of a staff member, ...).
/// Always signals a bug in the model, never bad user input.
class ModelError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

using AgentId = std::uint32_t;

}  // namespace retailsim
