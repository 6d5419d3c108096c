#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floodwatch/colour.hpp"
#include "floodwatch/colour_scale.hpp"
#include "floodwatch/stats.hpp"

namespace floodwatch {

enum class EventCategory { Institutional, Damage };

std::string_view toToken(EventCategory c);
std::optional<EventCategory> eventCategoryFromToken(std::string_view token);

/// Conjunction of optional conditions on one played day. Unset conditions are ignored;
/// a trigger with no condition never fires.
struct EventTrigger {
    std::optional<VigilanceColour> announcedAtLeast;
    std::optional<double> observedAtLeastMm;
    std::optional<double> observedBelowMm;
    std::optional<double> evacuatedFractionAtLeast;

    bool empty() const {
        return !announcedAtLeast && !observedAtLeastMm && !observedBelowMm && !evacuatedFractionAtLeast;
    }

    friend bool operator==(const EventTrigger&, const EventTrigger&) = default;
};

struct EventRule {
    std::string id;
    std::string message;
    EventCategory category = EventCategory::Institutional;
    EventTrigger when;

    bool matches(VigilanceColour announced, double observedMm, const PopulationStats& stats) const;

    friend bool operator==(const EventRule&, const EventRule&) = default;
};

struct TriggeredEvent {
    std::string id;
    std::string message;
    EventCategory category = EventCategory::Institutional;

    friend bool operator==(const TriggeredEvent&, const TriggeredEvent&) = default;
};

/// Schools closed and school buses stopped on Orange or Red; roads flooded at the
/// Red lower bound; bridge collapsed at twice the Red lower bound.
std::vector<EventRule> defaultEventRules(const ColourScale& scale = ColourScale::standard());

/// Each rule fires at most once, in rule order.
std::vector<TriggeredEvent> evaluateEvents(std::span<const EventRule> rules, VigilanceColour announced,
                                           double observedMm, const PopulationStats& stats);

}  // namespace floodwatch
