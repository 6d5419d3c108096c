#include "floodwatch/serialization.hpp"

#include "json_util.hpp"

namespace floodwatch {

using nlohmann::json;

void to_json(json& j, const PopulationStats& s) {
    json subjective = json::object();
    for (auto c : kAllColours) subjective[std::string(toToken(c))] = s.avgSubjectiveRiskMm[c];
    j = json{{"avg_trust", s.avgTrust},
             {"trust_delta", s.trustDelta},
             {"avg_expected_mm", s.avgExpectedRainMm},
             {"unaware_fraction", s.unawareFraction},
             {"evacuated_fraction", s.evacuatedFraction},
             {"avg_subjective_mm", subjective}};
}

void from_json(const json& j, PopulationStats& s) {
    using detail::get;
    s.avgTrust = get<double>(j, "avg_trust", "stats");
    s.trustDelta = get<double>(j, "trust_delta", "stats");
    s.avgExpectedRainMm = get<double>(j, "avg_expected_mm", "stats");
    s.unawareFraction = get<double>(j, "unaware_fraction", "stats");
    s.evacuatedFraction = get<double>(j, "evacuated_fraction", "stats");
    const auto subjective = get<json>(j, "avg_subjective_mm", "stats");
    for (auto c : kAllColours) {
        s.avgSubjectiveRiskMm[c] = get<double>(subjective, std::string(toToken(c)), "stats.avg_subjective_mm");
    }
}

void to_json(json& j, const CommunicationStats& s) {
    json perColour = json::object();
    for (auto c : kAllColours) {
        const auto& counts = s.perColour[c];
        perColour[std::string(toToken(c))] = json{{"days_announced", counts.daysAnnounced},
                                                  {"false_alarms", counts.falseAlarms},
                                                  {"missed_alarms", counts.missedAlarms}};
    }
    j = json{{"days_played", s.daysPlayed}, {"per_colour", perColour}};
}

void to_json(json& j, const TriggeredEvent& e) {
    j = json{{"id", e.id}, {"message", e.message}, {"category", std::string(toToken(e.category))}};
}

void from_json(const json& j, TriggeredEvent& e) {
    e.id = detail::get<std::string>(j, "id", "event");
    e.message = detail::get<std::string>(j, "message", "event");
    const auto category = eventCategoryFromToken(detail::get<std::string>(j, "category", "event"));
    if (!category) throw ConfigError("event.category", "unknown category");
    e.category = *category;
}

void to_json(json& j, const DayRecord& r) {
    j = json{{"date", r.date.iso()},
             {"forecast_mm", r.forecastRainMm},
             {"confidence", r.forecastConfidence},
             {"announced", std::string(toToken(r.announced))},
             {"observed_mm", r.observedRainMm},
             {"classification", std::string(toToken(r.classification))},
             {"post_alert", r.postAlert},
             {"post_observation", r.postObservation},
             {"events", r.events}};
}

void from_json(const json& j, DayRecord& r) {
    using detail::get;
    const std::string path = "day";
    r.date = detail::dateField(j, "date", path);
    r.forecastRainMm = get<double>(j, "forecast_mm", path);
    r.forecastConfidence = get<double>(j, "confidence", path);
    r.announced = detail::colourField(j, "announced", path);
    r.observedRainMm = get<double>(j, "observed_mm", path);
    const auto cls = alarmClassFromToken(get<std::string>(j, "classification", path));
    if (!cls) throw ConfigError("day.classification", "unknown classification");
    r.classification = *cls;
    r.postAlert = get<PopulationStats>(j, "post_alert", path);
    r.postObservation = get<PopulationStats>(j, "post_observation", path);
    r.events = get<std::vector<TriggeredEvent>>(j, "events", path);
}

}  // namespace floodwatch
