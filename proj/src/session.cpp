#include "floodwatch/session.hpp"

#include "floodwatch/error.hpp"
#include "floodwatch/serialization.hpp"
#include "json_util.hpp"

namespace floodwatch {

std::string_view toToken(Phase p) {
    switch (p) {
        case Phase::AwaitingColour:
            return "awaiting_colour";
        case Phase::AwaitingAdvance:
            return "awaiting_advance";
        case Phase::Complete:
            return "complete";
    }
    return "complete";
}

CommunicationStats communicationStats(const SessionHistory& history) {
    CommunicationStats s;
    for (const auto& day : history.days) {
        ++s.daysPlayed;
        auto& counts = s.perColour[day.announced];
        ++counts.daysAnnounced;
        if (day.classification == AlarmClass::FalseAlarm) ++counts.falseAlarms;
        if (day.classification == AlarmClass::Missed) ++counts.missedAlarms;
    }
    return s;
}

GameSession::GameSession(std::shared_ptr<const Scenario> scenario, SimulationConfig config, std::string sessionId)
    : id_(std::move(sessionId)),
      scenario_(std::move(scenario)),
      config_(std::move(config)),
      scale_(ColourScale::standard()) {
    if (!scenario_ || scenario_->days.empty()) throw UsageError("scenario has no days");
    validate(config_);
    scale_ = config_.scale.value_or(scenario_->scale);
    rules_ = config_.eventRules.value_or(defaultEventRules(scale_));
    population_ = samplePopulation(config_.population);
    latestStats_ = computePopulationStats(population_, scale_, std::nullopt, 0.0);
    history_.scenarioName = scenario_->name;
    history_.seed = config_.population.seed;
    history_.populationSize = population_.size();
}

std::optional<ForecastView> GameSession::upcomingForecast() const {
    if (complete()) return std::nullopt;
    const auto& day = scenario_->days[dayIndex_];
    return ForecastView{day.date, day.forecastRainMm, day.forecastConfidence};
}

PopulationStats GameSession::announceVigilance(VigilanceColour colour) {
    if (phase_ == Phase::Complete) throw SessionComplete();
    if (phase_ != Phase::AwaitingColour) throw ProtocolError("a colour was already announced for this day");

    const double observed = scenario_->days[dayIndex_].observedRainMm;
    for (auto& r : population_) {
        // Evacuees still form an expectation: trust is updated for everyone at observation time.
        const double expected = blendedExpectation(r, colour, scale_);
        if (!r.evacuated && decideEvacuation(r, expected)) r.evacuated = true;
    }
    currentColour_ = colour;
    phase_ = Phase::AwaitingAdvance;
    latestStats_ = computePopulationStats(population_, scale_, observed, lastTrustDelta_);
    pendingAlertStats_ = latestStats_;
    return latestStats_;
}

AdvanceResult GameSession::advanceDay() {
    if (phase_ == Phase::Complete) throw SessionComplete();
    if (phase_ != Phase::AwaitingAdvance) throw ProtocolError("announce a colour before advancing");

    const auto& day = scenario_->days[dayIndex_];
    const auto colour = *currentColour_;
    const double observed = day.observedRainMm;
    const double trustBefore = latestStats_.avgTrust;

    for (auto& r : population_) {
        updateTrust(r, observed, config_.trust);
        recordObservation(r, colour, observed);
        if (decideEvacuation(r, observed)) r.evacuated = true;
    }

    if (scale_.colourFor(observed) == VigilanceColour::Green) {
        ++consecutiveGreenDays_;
    } else {
        consecutiveGreenDays_ = 0;
    }
    if (config_.episodeResetDays > 0 && consecutiveGreenDays_ >= config_.episodeResetDays) {
        for (auto& r : population_) r.evacuated = false;
    }

    auto stats = computePopulationStats(population_, scale_, observed, 0.0);
    lastTrustDelta_ = stats.avgTrust - trustBefore;
    stats.trustDelta = lastTrustDelta_;
    latestStats_ = stats;

    DayRecord record;
    record.date = day.date;
    record.forecastRainMm = day.forecastRainMm;
    record.forecastConfidence = day.forecastConfidence;
    record.announced = colour;
    record.observedRainMm = observed;
    record.classification = classifyAlarm(scale_, colour, observed);
    record.postAlert = pendingAlertStats_;
    record.postObservation = stats;
    record.events = evaluateEvents(rules_, colour, observed, stats);

    ++comms_.daysPlayed;
    auto& counts = comms_.perColour[colour];
    ++counts.daysAnnounced;
    if (record.classification == AlarmClass::FalseAlarm) ++counts.falseAlarms;
    if (record.classification == AlarmClass::Missed) ++counts.missedAlarms;

    history_.days.push_back(record);
    currentColour_.reset();
    ++dayIndex_;
    phase_ = dayIndex_ == scenario_->days.size() ? Phase::Complete : Phase::AwaitingColour;
    return AdvanceResult{record, record.events, phase_ == Phase::Complete};
}

GameSession createSession(std::shared_ptr<const Scenario> scenario, const SimulationConfig& config,
                          std::string sessionId) {
    return GameSession(std::move(scenario), config, std::move(sessionId));
}

GameSession createSession(std::shared_ptr<const Scenario> scenario, const PopulationConfig& population,
                          const TrustParams& trust) {
    SimulationConfig config;
    config.population = population;
    config.trust = trust;
    return GameSession(std::move(scenario), config);
}

Policy forecastPolicy() {
    return [](const PolicyInput& in) { return in.scale->colourFor(in.forecastRainMm); };
}

Policy historicalPolicy() {
    return [](const PolicyInput& in) { return in.historicalColour.value_or(VigilanceColour::Green); };
}

Policy constantPolicy(VigilanceColour colour) {
    return [colour](const PolicyInput&) { return colour; };
}

Policy oraclePolicy() {
    return [](const PolicyInput& in) {
        if (!in.observedRainMm) throw UsageError("the oracle policy needs access to the observed rain");
        return in.scale->colourFor(*in.observedRainMm);
    };
}

std::optional<NamedPolicy> policyByName(std::string_view name) {
    if (name == "forecast") return NamedPolicy{forecastPolicy(), TruthAccess::Hidden};
    if (name == "historical") return NamedPolicy{historicalPolicy(), TruthAccess::Hidden};
    if (name == "oracle") return NamedPolicy{oraclePolicy(), TruthAccess::Revealed};
    constexpr std::string_view prefix = "always-";
    if (name.substr(0, prefix.size()) == prefix) {
        if (const auto colour = colourFromToken(name.substr(prefix.size()))) {
            return NamedPolicy{constantPolicy(*colour), TruthAccess::Hidden};
        }
    }
    return std::nullopt;
}

SessionHistory runPolicy(std::shared_ptr<const Scenario> scenario, const SimulationConfig& config,
                         const Policy& policy, TruthAccess access) {
    GameSession session(std::move(scenario), config);
    while (!session.complete()) {
        const auto& day = session.scenario().days[session.dayIndex()];
        PolicyInput in;
        in.date = day.date;
        in.dayIndex = session.dayIndex();
        in.forecastRainMm = day.forecastRainMm;
        in.forecastConfidence = day.forecastConfidence;
        in.historicalColour = day.historicalColour;
        in.stats = &session.latestStats();
        in.scale = &session.scale();
        if (access == TruthAccess::Revealed) in.observedRainMm = day.observedRainMm;
        session.announceVigilance(policy(in));
        session.advanceDay();
    }
    return session.history();
}

std::string toHistoryText(const SessionHistory& history) {
    using nlohmann::json;
    std::string out = "{\n";
    out += "  \"schema_version\": 1,\n";
    out += "  \"scenario\": " + json(history.scenarioName).dump() + ",\n";
    out += "  \"seed\": " + json(history.seed).dump() + ",\n";
    out += "  \"population_size\": " + json(history.populationSize).dump() + ",\n";
    out += "  \"days\": [";
    for (std::size_t i = 0; i < history.days.size(); ++i) {
        out += (i == 0 ? "\n    " : ",\n    ") + json(history.days[i]).dump();
    }
    out += history.days.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

SessionHistory historyFromText(std::string_view text) {
    const auto doc = detail::parseJson(text, "session history");
    const auto version = detail::get<int>(doc, "schema_version", "");
    if (version != 1) throw ConfigError("schema_version", "unsupported version " + std::to_string(version));
    SessionHistory h;
    h.scenarioName = detail::get<std::string>(doc, "scenario", "");
    h.seed = detail::get<std::uint64_t>(doc, "seed", "");
    h.populationSize = detail::get<std::size_t>(doc, "population_size", "");
    h.days = detail::get<std::vector<DayRecord>>(doc, "days", "");
    return h;
}

}  // namespace floodwatch
