#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockbench/semiclassics.hpp"

namespace fockbench {

// Scenario registry, in display order.
std::vector<std::string> scenario_names();

// Default configuration of a scenario as a JSON object; doubles as the
// parameter schema (every accepted key with its default value).
std::string scenario_default_config(const std::string& name);

// The full listing emitted by `list`: names plus schemas.
std::string scenario_listing_json();

// Parses the config text (empty = all defaults), applies the seed override
// where the scenario consumes one, and runs. Malformed JSON raises
// ConfigError with a line/column diagnostic; unknown keys or out-of-range
// values raise ConfigError naming the offender.
ScenarioReport run_scenario(const std::string& name,
                            const std::string& config_text,
                            std::optional<unsigned long long> seed_override);

}  // namespace fockbench
