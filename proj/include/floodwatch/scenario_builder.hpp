#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floodwatch/ingest.hpp"
#include "floodwatch/scenario.hpp"

namespace floodwatch {

/// Synthesizes the previous evening's forecast for a day with known rain.
///
/// forecast = observed * (1 + e), e ~ N(0, spread) drawn from a generator
/// keyed on (seed, date), floored at -1 so the forecast stays nonnegative.
/// Confidence is 1 / (1 + |e|). Forecasts are rounded to 0.1 mm and
/// confidences to 0.01, as they would be displayed.
struct ForecastModel {
    double spread = 0.0;
    std::uint64_t seed = 0;

    static ForecastModel perfect() { return {}; }
    static ForecastModel noisy(double spread, std::uint64_t seed) { return {spread, seed}; }

    struct Forecast {
        double rainMm;
        double confidence;
    };
    Forecast forecast(Date date, double observedMm) const;
};

/// One ScenarioDay per rain record. Every vigilance date must fall inside the
/// rain range (IngestError listing the uncovered dates otherwise); rain dates
/// without a vigilance record are Green.
Scenario buildHistoricalScenario(std::string name, std::span<const RainRecord> rain,
                                 std::span<const VigilanceRecord> vigilance, const ForecastModel& model,
                                 const ColourScale& scale = ColourScale::standard());

enum class EpisodeKind {
    QuietStretch,       ///< dry days, forecast close to truth
    FalseAlarmCluster,  ///< forecast in Orange or above, observed Green
    SurpriseFlood,      ///< forecast below Yellow, observed Red
    OrangeEvent,        ///< forecast and observed both Orange
    RedEvent,           ///< forecast and observed both Red
};

std::string_view toToken(EpisodeKind kind);

struct EpisodeTemplate {
    EpisodeKind kind = EpisodeKind::QuietStretch;
    int days = 1;
    /// Relative frequency under weighted ordering.
    double weight = 1.0;
};

struct GeneratorConfig {
    enum class Ordering { Sequential, Shuffled, Weighted };

    std::string name = "pedagogical";
    Date startDate{2018, 10, 1};
    std::vector<EpisodeTemplate> templates;
    Ordering ordering = Ordering::Sequential;
    /// Scenario length under weighted ordering; each template still appears at least once.
    int totalDays = 0;
    ColourScale scale = ColourScale::standard();
};

GeneratorConfig generatorConfigFromText(std::string_view json);
GeneratorConfig loadGeneratorConfigFile(const std::filesystem::path& path);

/// Deterministic for a fixed (seed, config). Throws ConfigError on an empty
/// template list or nonpositive lengths.
Scenario generatePedagogicalScenario(std::uint64_t seed, const GeneratorConfig& config);

}  // namespace floodwatch
