#include "floodwatch/stats.hpp"

#include <array>

namespace floodwatch {

namespace {
constexpr std::array<std::string_view, 3> kAlarmTokens{"correct", "false_alarm", "missed"};
}

std::string_view toToken(AlarmClass c) { return kAlarmTokens[static_cast<std::size_t>(c)]; }

std::optional<AlarmClass> alarmClassFromToken(std::string_view token) {
    for (std::size_t i = 0; i < kAlarmTokens.size(); ++i) {
        if (kAlarmTokens[i] == token) return static_cast<AlarmClass>(i);
    }
    return std::nullopt;
}

AlarmClass classifyAlarm(const ColourScale& scale, VigilanceColour announced, double observedMm) {
    const auto actual = scale.colourFor(observedMm);
    if (announced > actual) return AlarmClass::FalseAlarm;
    if (announced < actual) return AlarmClass::Missed;
    return AlarmClass::Correct;
}

PopulationStats computePopulationStats(std::span<const Resident> residents, const ColourScale& scale,
                                       std::optional<double> observedMm, double trustDelta) {
    PopulationStats s;
    s.trustDelta = trustDelta;
    if (residents.empty()) return s;

    double trust = 0.0;
    double expected = 0.0;
    std::size_t unaware = 0;
    std::size_t evacuated = 0;
    PerColour<double> subjective{};
    for (const auto& r : residents) {
        trust += r.trust;
        if (r.lastExpectedRainMm) {
            expected += *r.lastExpectedRainMm;
            if (observedMm && *r.lastExpectedRainMm < *observedMm) ++unaware;
        }
        if (r.evacuated) ++evacuated;
        for (auto c : kAllColours) subjective[c] += subjectiveRisk(r, c, scale.officialRisk(c));
    }

    const auto n = static_cast<double>(residents.size());
    s.avgTrust = trust / n;
    s.avgExpectedRainMm = expected / n;
    s.unawareFraction = static_cast<double>(unaware) / n;
    s.evacuatedFraction = static_cast<double>(evacuated) / n;
    for (auto c : kAllColours) s.avgSubjectiveRiskMm[c] = subjective[c] / n;
    return s;
}

}  // namespace floodwatch
