#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "floodwatch/colour.hpp"
#include "floodwatch/colour_scale.hpp"
#include "floodwatch/resident.hpp"

namespace floodwatch {

/// Population panel snapshot.
struct PopulationStats {
    double avgTrust = 0.0;
    /// Most recent day-over-day change in avgTrust.
    double trustDelta = 0.0;
    /// Mean expectation formed at the latest alert (0 before the first alert).
    double avgExpectedRainMm = 0.0;
    /// Share of residents whose expectation is below the day's observed rain.
    double unawareFraction = 0.0;
    double evacuatedFraction = 0.0;
    /// Mean subjective risk per colour, with the official risk as the empty-memory fallback.
    PerColour<double> avgSubjectiveRiskMm{};

    friend bool operator==(const PopulationStats&, const PopulationStats&) = default;
};

struct ColourCounts {
    int daysAnnounced = 0;
    int falseAlarms = 0;
    int missedAlarms = 0;

    friend bool operator==(const ColourCounts&, const ColourCounts&) = default;
};

/// Communication panel: per-colour alarm bookkeeping.
struct CommunicationStats {
    int daysPlayed = 0;
    PerColour<ColourCounts> perColour{};

    friend bool operator==(const CommunicationStats&, const CommunicationStats&) = default;
};

enum class AlarmClass { Correct, FalseAlarm, Missed };

std::string_view toToken(AlarmClass c);
std::optional<AlarmClass> alarmClassFromToken(std::string_view token);

/// Compares the announced colour with the band of the observed rain.
AlarmClass classifyAlarm(const ColourScale& scale, VigilanceColour announced, double observedMm);

/// Snapshot over the population. When `observedMm` is empty (no alert yet) the
/// expectation-based fields are zero.
PopulationStats computePopulationStats(std::span<const Resident> residents, const ColourScale& scale,
                                       std::optional<double> observedMm, double trustDelta);

}  // namespace floodwatch
