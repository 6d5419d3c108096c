#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floodwatch/colour.hpp"
#include "floodwatch/colour_scale.hpp"
#include "floodwatch/date.hpp"

namespace floodwatch {

struct ScenarioDay {
    Date date;
    double observedRainMm = 0.0;
    /// Forecast for this day, issued the previous evening.
    double forecastRainMm = 0.0;
    double forecastConfidence = 1.0;
    /// Colour actually announced, when replaying archives.
    std::optional<VigilanceColour> historicalColour;

    friend bool operator==(const ScenarioDay&, const ScenarioDay&) = default;
};

enum class Provenance { Historical, Generated };

/// Immutable once built; safe to share between sessions.
struct Scenario {
    std::string name;
    std::vector<ScenarioDay> days;
    ColourScale scale = ColourScale::standard();
    Provenance provenance = Provenance::Historical;
    /// Generator seed, for generated scenarios.
    std::optional<std::uint64_t> seed;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws IngestError unless dates advance by exactly one day, rain amounts are
/// nonnegative and confidences lie in [0,1]. `line` in the error is the 1-based day index.
void validate(const Scenario& scenario);

/// Days in [from, to] inclusive, same scale and provenance.
Scenario trimmed(const Scenario& scenario, Date from, Date to);

/// Stable, diff-friendly JSON archive (schema_version 1).
std::string toArchiveText(const Scenario& scenario);
Scenario scenarioFromArchiveText(std::string_view text);

Scenario loadScenarioFile(const std::filesystem::path& path);
void saveScenarioFile(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace floodwatch
