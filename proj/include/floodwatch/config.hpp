#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floodwatch/colour_scale.hpp"
#include "floodwatch/events.hpp"
#include "floodwatch/resident.hpp"

namespace floodwatch {

/// Everything a session needs besides the scenario.
struct SimulationConfig {
    PopulationConfig population;
    TrustParams trust;
    /// Replaces the scenario's scale when set.
    std::optional<ColourScale> scale;
    /// Defaults derived from the effective scale when unset.
    std::optional<std::vector<EventRule>> eventRules;
    /// Evacuees return home after this many consecutive Green-band observed days; 0 disables returns.
    int episodeResetDays = 2;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

inline constexpr int kConfigSchemaVersion = 1;

/// Throws ConfigError with the offending field path.
void validate(const SimulationConfig& config);

/// JSON document with a `schema_version` field. Missing sections take the defaults.
SimulationConfig configFromText(std::string_view json);
SimulationConfig loadConfigFile(const std::filesystem::path& path);
std::string toConfigText(const SimulationConfig& config);

}  // namespace floodwatch
