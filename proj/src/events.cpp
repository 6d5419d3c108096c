#include "floodwatch/events.hpp"

namespace floodwatch {

std::string_view toToken(EventCategory c) { return c == EventCategory::Institutional ? "institutional" : "damage"; }

std::optional<EventCategory> eventCategoryFromToken(std::string_view token) {
    if (token == "institutional") return EventCategory::Institutional;
    if (token == "damage") return EventCategory::Damage;
    return std::nullopt;
}

bool EventRule::matches(VigilanceColour announced, double observedMm, const PopulationStats& stats) const {
    if (when.empty()) return false;
    if (when.announcedAtLeast && announced < *when.announcedAtLeast) return false;
    if (when.observedAtLeastMm && observedMm < *when.observedAtLeastMm) return false;
    if (when.observedBelowMm && observedMm >= *when.observedBelowMm) return false;
    if (when.evacuatedFractionAtLeast && stats.evacuatedFraction < *when.evacuatedFractionAtLeast) return false;
    return true;
}

std::vector<EventRule> defaultEventRules(const ColourScale& scale) {
    const double red = scale.lowerBound(VigilanceColour::Red);
    EventTrigger onAlert;
    onAlert.announcedAtLeast = VigilanceColour::Orange;
    EventTrigger heavyRain;
    heavyRain.observedAtLeastMm = red;
    EventTrigger extremeRain;
    extremeRain.observedAtLeastMm = 2.0 * red;
    return {
        {"schools_closed", "Schools closed", EventCategory::Institutional, onAlert},
        {"school_buses_stopped", "School buses stopped", EventCategory::Institutional, onAlert},
        {"roads_flooded", "Roads flooded", EventCategory::Damage, heavyRain},
        {"bridge_collapsed", "Bridge collapsed", EventCategory::Damage, extremeRain},
    };
}

std::vector<TriggeredEvent> evaluateEvents(std::span<const EventRule> rules, VigilanceColour announced,
                                           double observedMm, const PopulationStats& stats) {
    std::vector<TriggeredEvent> fired;
    for (const auto& rule : rules) {
        if (rule.matches(announced, observedMm, stats)) fired.push_back({rule.id, rule.message, rule.category});
    }
    return fired;
}

}  // namespace floodwatch
