#include "floodwatch/scenario_builder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "floodwatch/error.hpp"
#include "json_util.hpp"

namespace floodwatch {

namespace {

constexpr std::array<std::string_view, 5> kEpisodeTokens{"quiet_stretch", "false_alarm_cluster", "surprise_flood",
                                                         "orange_event", "red_event"};

std::mt19937_64 seededEngine(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
    return std::mt19937_64(seq);
}

double roundTenth(double v) { return std::round(v * 10.0) / 10.0; }

// Uniform in [lo, hi), truncated to 0.1 mm without leaving the interval.
double sampleMm(std::mt19937_64& rng, double lo, double hi) {
    const double v = std::uniform_real_distribution<double>(lo, hi)(rng);
    return std::max(lo, std::floor(v * 10.0) / 10.0);
}

double sampleConfidence(std::mt19937_64& rng, double lo, double hi) {
    return std::round(std::uniform_real_distribution<double>(lo, hi)(rng) * 100.0) / 100.0;
}

ScenarioDay episodeDay(EpisodeKind kind, const ColourScale& scale, std::mt19937_64& rng) {
    const double yellow = scale.lowerBound(VigilanceColour::Yellow);
    const double orange = scale.lowerBound(VigilanceColour::Orange);
    const double red = scale.lowerBound(VigilanceColour::Red);

    ScenarioDay d;
    switch (kind) {
        case EpisodeKind::QuietStretch: {
            d.observedRainMm = sampleMm(rng, 0.0, 0.5 * yellow);
            const double noise = std::uniform_real_distribution<double>(-0.3, 0.3)(rng);
            d.forecastRainMm = std::floor(d.observedRainMm * (1.0 + noise) * 10.0) / 10.0;
            d.forecastConfidence = sampleConfidence(rng, 0.8, 1.0);
            break;
        }
        case EpisodeKind::FalseAlarmCluster:
            d.forecastRainMm = sampleMm(rng, orange, red);
            d.observedRainMm = sampleMm(rng, 0.0, 0.5 * yellow);
            d.forecastConfidence = sampleConfidence(rng, 0.5, 0.9);
            break;
        case EpisodeKind::SurpriseFlood:
            d.forecastRainMm = sampleMm(rng, 0.0, 0.5 * yellow);
            d.observedRainMm = sampleMm(rng, red, 1.8 * red);
            d.forecastConfidence = sampleConfidence(rng, 0.6, 0.95);
            break;
        case EpisodeKind::OrangeEvent:
            d.forecastRainMm = sampleMm(rng, orange, red);
            d.observedRainMm = sampleMm(rng, orange, red);
            d.forecastConfidence = sampleConfidence(rng, 0.6, 0.9);
            break;
        case EpisodeKind::RedEvent:
            d.forecastRainMm = sampleMm(rng, red, 1.6 * red);
            d.observedRainMm = sampleMm(rng, red, 2.0 * red);
            d.forecastConfidence = sampleConfidence(rng, 0.6, 0.9);
            break;
    }
    return d;
}

}  // namespace

ForecastModel::Forecast ForecastModel::forecast(Date date, double observedMm) const {
    if (spread <= 0.0) return {observedMm, 1.0};
    const auto dayKey = static_cast<std::uint64_t>(date.sysDays().time_since_epoch().count());
    auto rng = seededEngine(seed, dayKey);
    const double error = std::max(-1.0, std::normal_distribution<double>(0.0, spread)(rng));
    return {roundTenth(observedMm * (1.0 + error)), std::round(100.0 / (1.0 + std::abs(error))) / 100.0};
}

Scenario buildHistoricalScenario(std::string name, std::span<const RainRecord> rain,
                                 std::span<const VigilanceRecord> vigilance, const ForecastModel& model,
                                 const ColourScale& scale) {
    if (rain.empty()) throw IngestError(0, "rain series is empty");
    const Date first = rain.front().date;
    const Date last = rain.back().date;

    std::map<Date, VigilanceColour> colours;
    std::vector<std::string> uncovered;
    for (const auto& v : vigilance) {
        if (v.date < first || v.date > last) {
            uncovered.push_back(v.date.iso());
        } else {
            colours[v.date] = v.colour;
        }
    }
    if (!uncovered.empty()) {
        std::string list;
        const std::size_t shown = std::min<std::size_t>(uncovered.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) list += (i ? ", " : "") + uncovered[i];
        if (uncovered.size() > shown) list += ", ... (" + std::to_string(uncovered.size()) + " total)";
        throw IngestError(0, "vigilance dates missing from rain series: " + list);
    }

    Scenario s;
    s.name = std::move(name);
    s.scale = scale;
    s.provenance = Provenance::Historical;
    s.days.reserve(rain.size());
    for (const auto& r : rain) {
        const auto f = model.forecast(r.date, r.rainMm);
        const auto it = colours.find(r.date);
        s.days.push_back({r.date, r.rainMm, f.rainMm, f.confidence,
                          it == colours.end() ? VigilanceColour::Green : it->second});
    }
    validate(s);
    return s;
}

std::string_view toToken(EpisodeKind kind) { return kEpisodeTokens[static_cast<std::size_t>(kind)]; }

GeneratorConfig generatorConfigFromText(std::string_view text) {
    using detail::get;
    using detail::getOr;
    const auto doc = detail::parseJson(text, "generator config");

    GeneratorConfig c;
    c.name = getOr<std::string>(doc, "name", "", c.name);
    if (doc.contains("start_date")) c.startDate = detail::dateField(doc, "start_date", "");
    if (doc.contains("scale")) c.scale = detail::scaleFromJson(doc.at("scale"), "scale");
    c.totalDays = getOr<int>(doc, "total_days", "", 0);

    const auto ordering = getOr<std::string>(doc, "ordering", "", "sequential");
    if (ordering == "sequential") {
        c.ordering = GeneratorConfig::Ordering::Sequential;
    } else if (ordering == "shuffled") {
        c.ordering = GeneratorConfig::Ordering::Shuffled;
    } else if (ordering == "weighted") {
        c.ordering = GeneratorConfig::Ordering::Weighted;
    } else {
        throw ConfigError("ordering", "unknown ordering '" + ordering + "'");
    }

    const auto templates = getOr<detail::json>(doc, "templates", "", detail::json::array());
    if (!templates.is_array()) throw ConfigError("templates", "must be an array");
    for (std::size_t i = 0; i < templates.size(); ++i) {
        const auto path = "templates[" + std::to_string(i) + "]";
        const auto kind = get<std::string>(templates[i], "kind", path);
        const auto it = std::find(kEpisodeTokens.begin(), kEpisodeTokens.end(), kind);
        if (it == kEpisodeTokens.end()) throw ConfigError(path + ".kind", "unknown template '" + kind + "'");
        EpisodeTemplate t;
        t.kind = static_cast<EpisodeKind>(it - kEpisodeTokens.begin());
        t.days = getOr<int>(templates[i], "days", path, 1);
        t.weight = getOr<double>(templates[i], "weight", path, 1.0);
        c.templates.push_back(t);
    }
    return c;
}

GeneratorConfig loadGeneratorConfigFile(const std::filesystem::path& path) {
    return generatorConfigFromText(detail::readFile(path));
}

Scenario generatePedagogicalScenario(std::uint64_t seed, const GeneratorConfig& config) {
    if (config.templates.empty()) throw ConfigError("templates", "at least one template is required");
    for (std::size_t i = 0; i < config.templates.size(); ++i) {
        const auto& t = config.templates[i];
        const auto path = "templates[" + std::to_string(i) + "]";
        if (t.days < 1) throw ConfigError(path + ".days", "must be at least 1");
        if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) throw ConfigError(path + ".weight", "must be nonnegative");
    }

    auto rng = seededEngine(seed, 0x5ce9a210u);

    // Each block is (template index, length).
    std::vector<std::pair<std::size_t, int>> blocks;
    for (std::size_t i = 0; i < config.templates.size(); ++i) blocks.emplace_back(i, config.templates[i].days);

    if (config.ordering == GeneratorConfig::Ordering::Weighted) {
        int remaining = config.totalDays;
        for (const auto& b : blocks) remaining -= b.second;
        if (remaining < 0) throw ConfigError("total_days", "shorter than one block of every template");
        std::vector<double> weights;
        for (const auto& t : config.templates) weights.push_back(t.weight);
        if (remaining > 0 && std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
            throw ConfigError("templates", "weights must not all be zero");
        }
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        while (remaining > 0) {
            const auto i = pick(rng);
            const int len = std::min(config.templates[i].days, remaining);
            blocks.emplace_back(i, len);
            remaining -= len;
        }
    }
    if (config.ordering != GeneratorConfig::Ordering::Sequential) std::shuffle(blocks.begin(), blocks.end(), rng);

    Scenario s;
    s.name = config.name;
    s.scale = config.scale;
    s.provenance = Provenance::Generated;
    s.seed = seed;
    Date date = config.startDate;
    for (const auto& [templateIndex, length] : blocks) {
        for (int k = 0; k < length; ++k) {
            auto day = episodeDay(config.templates[templateIndex].kind, config.scale, rng);
            day.date = date;
            date = date.plusDays(1);
            s.days.push_back(day);
        }
    }
    validate(s);
    return s;
}

}  // namespace floodwatch
