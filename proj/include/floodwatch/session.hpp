#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "floodwatch/config.hpp"
#include "floodwatch/events.hpp"
#include "floodwatch/resident.hpp"
#include "floodwatch/scenario.hpp"
#include "floodwatch/stats.hpp"

namespace floodwatch {

enum class Phase { AwaitingColour, AwaitingAdvance, Complete };

std::string_view toToken(Phase p);

/// One played day, as stored in the session history.
struct DayRecord {
    Date date;
    double forecastRainMm = 0.0;
    double forecastConfidence = 0.0;
    VigilanceColour announced = VigilanceColour::Green;
    double observedRainMm = 0.0;
    AlarmClass classification = AlarmClass::Correct;
    PopulationStats postAlert;
    PopulationStats postObservation;
    std::vector<TriggeredEvent> events;

    friend bool operator==(const DayRecord&, const DayRecord&) = default;
};

struct SessionHistory {
    std::string scenarioName;
    std::uint64_t seed = 0;
    std::size_t populationSize = 0;
    std::vector<DayRecord> days;

    friend bool operator==(const SessionHistory&, const SessionHistory&) = default;
};

/// Recount of the communication panel from stored records.
CommunicationStats communicationStats(const SessionHistory& history);

struct ForecastView {
    Date date;
    double rainMm = 0.0;
    double confidence = 0.0;
};

struct AdvanceResult {
    DayRecord record;
    std::vector<TriggeredEvent> events;
    /// True once the last scenario day has been played.
    bool complete = false;
};

/// Turn-based game over one scenario and one population.
///
/// Each scenario day is played as announceVigilance (the communicator picks a
/// colour from the forecast; residents form expectations and may evacuate)
/// followed by advanceDay (the day's rain is revealed; residents update trust
/// and memory and may evacuate late). Calls out of phase throw ProtocolError;
/// any mutation after the last day throws SessionComplete.
class GameSession {
public:
    GameSession(std::shared_ptr<const Scenario> scenario, SimulationConfig config, std::string sessionId = {});

    PopulationStats announceVigilance(VigilanceColour colour);
    AdvanceResult advanceDay();

    const std::string& id() const { return id_; }
    const Scenario& scenario() const { return *scenario_; }
    const SimulationConfig& config() const { return config_; }
    const ColourScale& scale() const { return scale_; }
    const std::vector<EventRule>& eventRules() const { return rules_; }
    const std::vector<Resident>& population() const { return population_; }
    std::size_t dayIndex() const { return dayIndex_; }
    Phase phase() const { return phase_; }
    bool complete() const { return phase_ == Phase::Complete; }
    /// Colour announced for the current day, while AwaitingAdvance.
    std::optional<VigilanceColour> currentColour() const { return currentColour_; }
    /// Forecast for the day about to be announced; empty once complete.
    std::optional<ForecastView> upcomingForecast() const;
    /// Latest population snapshot (initial, post-alert or post-observation).
    const PopulationStats& latestStats() const { return latestStats_; }
    const SessionHistory& history() const { return history_; }
    CommunicationStats communicationStats() const { return comms_; }

private:
    std::string id_;
    std::shared_ptr<const Scenario> scenario_;
    SimulationConfig config_;
    ColourScale scale_;
    std::vector<EventRule> rules_;
    std::vector<Resident> population_;
    std::size_t dayIndex_ = 0;
    Phase phase_ = Phase::AwaitingColour;
    std::optional<VigilanceColour> currentColour_;
    PopulationStats latestStats_;
    PopulationStats pendingAlertStats_;
    double lastTrustDelta_ = 0.0;
    int consecutiveGreenDays_ = 0;
    SessionHistory history_;
    CommunicationStats comms_;
};

/// Throws UsageError on an empty scenario and ConfigError on an invalid config.
GameSession createSession(std::shared_ptr<const Scenario> scenario, const SimulationConfig& config,
                          std::string sessionId = {});
GameSession createSession(std::shared_ptr<const Scenario> scenario, const PopulationConfig& population,
                          const TrustParams& trust);

/// What a scripted communicator sees before choosing a colour.
struct PolicyInput {
    Date date;
    std::size_t dayIndex = 0;
    double forecastRainMm = 0.0;
    double forecastConfidence = 0.0;
    std::optional<VigilanceColour> historicalColour;
    const PopulationStats* stats = nullptr;
    const ColourScale* scale = nullptr;
    /// Only set when the harness grants access to the truth.
    std::optional<double> observedRainMm;
};

using Policy = std::function<VigilanceColour(const PolicyInput&)>;

enum class TruthAccess { Hidden, Revealed };

struct NamedPolicy {
    Policy policy;
    TruthAccess access = TruthAccess::Hidden;
};

/// Announces the colour of the forecast band.
Policy forecastPolicy();
/// Replays the archived colour (Green when absent).
Policy historicalPolicy();
Policy constantPolicy(VigilanceColour colour);
/// Announces the band of the true rain; requires TruthAccess::Revealed.
Policy oraclePolicy();

/// "forecast", "historical", "oracle", "always-green" ... "always-red".
std::optional<NamedPolicy> policyByName(std::string_view name);

/// Plays every scenario day with `policy` choosing each colour.
SessionHistory runPolicy(std::shared_ptr<const Scenario> scenario, const SimulationConfig& config,
                         const Policy& policy, TruthAccess access = TruthAccess::Hidden);

/// Schema-versioned JSON, one day per line. Doubles round-trip exactly.
std::string toHistoryText(const SessionHistory& history);
SessionHistory historyFromText(std::string_view text);

}  // namespace floodwatch
