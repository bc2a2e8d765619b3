#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "retailsim/scenario/config.hpp"

namespace retailsim::scenario {

/// Parses a YAML scenario document and validates it. When `preset` is given,
/// the preset provides defaults and every other key overrides it; without a
/// preset the hand-built defaults of ScenarioConfig apply. Unknown keys,
/// malformed values and validation failures are all collected into one
/// ConfigError.
///
/// Distributions are written as a number (constant; `.inf` means never), or
/// a mapping with `type` in {exponential, triangular, empirical, constant}:
///
///   arrivals: {type: exponential, mean: 4}       # or rate: 0.25
///   service:
///     till: {type: triangular, min: 1, mode: 2, max: 4}
///   customers:
///     browse_time: {type: empirical, table: [[2, 0.5], [6, 0.5]]}
ScenarioConfig parse_config(std::string_view yaml_text);

/// Reads and parses a file. Throws std::runtime_error when unreadable.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Emits a document that parse_config reads back to the same config.
std::string to_yaml(const ScenarioConfig& config);

}  // namespace retailsim::scenario
