#include "floodwatch/resident.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "floodwatch/error.hpp"

namespace floodwatch {

namespace {

void checkRange(const Distribution& d, const char* field, double lo, double hi, bool loInclusive) {
    const std::string f(field);
    if (!std::isfinite(d.min) || !std::isfinite(d.max)) throw ConfigError(f, "bounds must be finite");
    if (d.kind == Distribution::Kind::Uniform && d.min > d.max) throw ConfigError(f, "min exceeds max");
    if (loInclusive ? d.min < lo : d.min <= lo) throw ConfigError(f + ".min", "out of range");
    if (d.max > hi) throw ConfigError(f + ".max", "out of range");
}

double draw(const Distribution& d, std::mt19937_64& rng) {
    if (d.kind == Distribution::Kind::Constant || d.min == d.max) return d.min;
    return std::uniform_real_distribution<double>(d.min, d.max)(rng);
}

}  // namespace

void validate(const PopulationConfig& config) {
    if (config.size == 0) throw ConfigError("population.size", "must be positive");
    checkRange(config.trustInit, "population.trust", 0.0, 1.0, true);
    checkRange(config.thresholdMm, "population.threshold_mm", 0.0, HUGE_VAL, false);
    if (config.memoryDepth.min < 1) throw ConfigError("population.memory_depth.min", "must be at least 1");
    if (config.memoryDepth.min > config.memoryDepth.max) throw ConfigError("population.memory_depth", "min exceeds max");

    double total = 0.0;
    for (auto s : kAllStrategies) {
        const double w = config.strategyWeights[index(s)];
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ConfigError("population.strategy_weights." + std::string(toToken(s)), "must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ConfigError("population.strategy_weights", "must sum to 1");
}

void validate(const TrustParams& params) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(params.gainSlight) || params.gainSlight < 0.0 || params.gainSlight > kMaxGainSlight) {
        throw ConfigError("trust.gain_slight", "must lie in [0, 0.05]");
    }
    if (!finite(params.lossFalseAlarmRate) || params.lossFalseAlarmRate <= 0.0) {
        throw ConfigError("trust.loss_false_alarm_rate", "must be positive");
    }
    if (!finite(params.lossMissedRate) || params.lossMissedRate <= params.lossFalseAlarmRate) {
        throw ConfigError("trust.loss_missed_rate", "must exceed loss_false_alarm_rate");
    }
    if (!finite(params.surpriseToleranceMm) || params.surpriseToleranceMm < 0.0) {
        throw ConfigError("trust.surprise_tolerance_mm", "must be nonnegative");
    }
    if (!finite(params.severityScaleMm) || params.severityScaleMm <= 0.0) {
        throw ConfigError("trust.severity_scale_mm", "must be positive");
    }
}

Resident sampleResident(const PopulationConfig& config, std::size_t index) {
    validate(config);
    if (index >= config.size) throw UsageError("resident index out of range");

    const auto seed = config.seed;
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    std::mt19937_64 rng(seq);

    Resident r;
    r.id = idx;
    r.trust = draw(config.trustInit, rng);
    r.riskAversionThresholdMm = draw(config.thresholdMm, rng);
    r.memoryDepth = config.memoryDepth.min == config.memoryDepth.max
                        ? config.memoryDepth.min
                        : std::uniform_int_distribution<int>(config.memoryDepth.min, config.memoryDepth.max)(rng);
    std::discrete_distribution<int> pick(config.strategyWeights.begin(), config.strategyWeights.end());
    r.strategy = static_cast<RiskStrategy>(pick(rng));
    return r;
}

std::vector<Resident> samplePopulation(const PopulationConfig& config) {
    validate(config);
    std::vector<Resident> out;
    out.reserve(config.size);
    for (std::size_t i = 0; i < config.size; ++i) out.push_back(sampleResident(config, i));
    return out;
}

double subjectiveRisk(const Resident& resident, VigilanceColour colour, double fallbackMm) {
    const auto& seen = resident.memory[colour];
    if (seen.empty()) return fallbackMm;
    switch (resident.strategy) {
        case RiskStrategy::Optimistic:
            return *std::min_element(seen.begin(), seen.end());
        case RiskStrategy::Pessimistic:
            return *std::max_element(seen.begin(), seen.end());
        case RiskStrategy::Rational: {
            // Rounding in the sum can push the mean a few ulps outside [min, max].
            const auto [lo, hi] = std::minmax_element(seen.begin(), seen.end());
            const double mean = std::accumulate(seen.begin(), seen.end(), 0.0) / static_cast<double>(seen.size());
            return std::clamp(mean, *lo, *hi);
        }
        case RiskStrategy::ShortMemory:
            return seen.back();
    }
    return fallbackMm;
}

double blend(double trust, double officialMm, double subjectiveMm) {
    return trust * officialMm + (1.0 - trust) * subjectiveMm;
}

double blendedExpectation(Resident& resident, double officialMm, double subjectiveMm) {
    const double expected = blend(resident.trust, officialMm, subjectiveMm);
    resident.lastExpectedRainMm = expected;
    return expected;
}

double blendedExpectation(Resident& resident, VigilanceColour colour, const ColourScale& scale) {
    const double official = scale.officialRisk(colour);
    return blendedExpectation(resident, official, subjectiveRisk(resident, colour, official));
}

double updatedTrust(double trust, double expectedMm, double observedMm, const TrustParams& params) {
    const double surprise = observedMm - expectedMm;
    const double excess = std::abs(surprise) - params.surpriseToleranceMm;
    if (excess <= 0.0) return std::min(1.0, trust + params.gainSlight);
    const double rate = surprise > 0.0 ? params.lossMissedRate : params.lossFalseAlarmRate;
    return std::max(0.0, trust - rate * excess / params.severityScaleMm);
}

void updateTrust(Resident& resident, double observedMm, const TrustParams& params) {
    if (!resident.lastExpectedRainMm) throw UsageError("updateTrust called before an expectation was formed");
    resident.trust = updatedTrust(resident.trust, *resident.lastExpectedRainMm, observedMm, params);
}

void recordObservation(Resident& resident, VigilanceColour colour, double observedMm) {
    auto& seen = resident.memory[colour];
    seen.push_back(observedMm);
    while (seen.size() > static_cast<std::size_t>(resident.memoryDepth)) seen.pop_front();
}

bool decideEvacuation(const Resident& resident, double expectedMm) {
    return resident.evacuated || expectedMm >= resident.riskAversionThresholdMm;
}

}  // namespace floodwatch
