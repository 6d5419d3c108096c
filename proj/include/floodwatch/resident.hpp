#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "floodwatch/colour.hpp"
#include "floodwatch/colour_scale.hpp"

namespace floodwatch {

/// One member of the simulated population.
struct Resident {
    std::uint64_t id = 0;
    /// Weight in [0,1] given to the official announcement.
    double trust = 0.5;
    /// Expected daily rain (mm) at or above which the resident evacuates.
    double riskAversionThresholdMm = 60.0;
    /// Maximum number of remembered observations per colour.
    int memoryDepth = 3;
    RiskStrategy strategy = RiskStrategy::Rational;
    /// Observed rain on past days, keyed by the colour announced that day. Most recent last.
    PerColour<std::deque<double>> memory{};
    bool evacuated = false;
    /// Expectation formed at the latest alert; the baseline for updateTrust.
    std::optional<double> lastExpectedRainMm;

    friend bool operator==(const Resident&, const Resident&) = default;
};

/// Real-valued sampling rule: a constant or a closed uniform range.
struct Distribution {
    enum class Kind { Constant, Uniform };
    Kind kind = Kind::Constant;
    double min = 0.0;
    double max = 0.0;

    static Distribution constant(double v) { return {Kind::Constant, v, v}; }
    static Distribution uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Integer sampling rule over an inclusive range.
struct IntDistribution {
    int min = 1;
    int max = 1;

    static IntDistribution constant(int v) { return {v, v}; }
    static IntDistribution uniform(int lo, int hi) { return {lo, hi}; }

    friend bool operator==(const IntDistribution&, const IntDistribution&) = default;
};

struct PopulationConfig {
    std::size_t size = 200;
    Distribution trustInit = Distribution::uniform(0.3, 0.9);
    Distribution thresholdMm = Distribution::uniform(30.0, 120.0);
    IntDistribution memoryDepth = IntDistribution::uniform(1, 5);
    /// Indexed by RiskStrategy; nonnegative, summing to 1.
    std::array<double, kStrategyCount> strategyWeights{0.25, 0.25, 0.25, 0.25};
    std::uint64_t seed = 1;

    friend bool operator==(const PopulationConfig&, const PopulationConfig&) = default;
};

/// Parameters of the asymmetric trust update.
///
/// Trust rises by `gainSlight` when the observation lands within
/// `surpriseToleranceMm` of the expectation. Otherwise it falls linearly in
/// the excess surprise, divided by `severityScaleMm`, with a steeper rate for
/// under-announced rain than for false alarms.
struct TrustParams {
    double gainSlight = 0.02;
    double lossFalseAlarmRate = 0.15;
    double lossMissedRate = 0.40;
    double surpriseToleranceMm = 10.0;
    double severityScaleMm = 100.0;

    friend bool operator==(const TrustParams&, const TrustParams&) = default;
};

inline constexpr double kMaxGainSlight = 0.05;

/// Throw ConfigError (with a field path) when a bound violates the Resident invariants.
void validate(const PopulationConfig& config);
void validate(const TrustParams& params);

/// Deterministic in (config.seed, index); independent of sampling order.
Resident sampleResident(const PopulationConfig& config, std::size_t index);
std::vector<Resident> samplePopulation(const PopulationConfig& config);

/// Personal estimate of rain under `colour`, from the resident's memory of that colour:
/// min (Optimistic), max (Pessimistic), mean (Rational) or most recent (ShortMemory).
/// `fallbackMm` is returned when nothing is remembered for the colour.
double subjectiveRisk(const Resident& resident, VigilanceColour colour, double fallbackMm);

/// trust * official + (1 - trust) * subjective.
double blend(double trust, double officialMm, double subjectiveMm);

/// Forms and stores the resident's expectation for an announced colour.
/// The empty-memory fallback is the colour's official risk.
double blendedExpectation(Resident& resident, VigilanceColour colour, const ColourScale& scale);

/// Same, with an explicit official risk and subjective estimate already computed.
double blendedExpectation(Resident& resident, double officialMm, double subjectiveMm);

/// Trust after comparing `observedMm` with `expectedMm`. Pure; clamps to [0,1].
double updatedTrust(double trust, double expectedMm, double observedMm, const TrustParams& params);

/// Applies updatedTrust against the stored expectation.
/// Throws UsageError when no expectation has been formed.
void updateTrust(Resident& resident, double observedMm, const TrustParams& params);

/// Appends to memory[colour], evicting the oldest entry beyond memoryDepth.
void recordObservation(Resident& resident, VigilanceColour colour, double observedMm);

/// True when already evacuated or when `expectedMm` reaches the threshold.
bool decideEvacuation(const Resident& resident, double expectedMm);

}  // namespace floodwatch
