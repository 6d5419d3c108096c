#include "floodwatch/config.hpp"

#include <set>

#include "floodwatch/error.hpp"
#include "json_util.hpp"

namespace floodwatch {

using detail::get;
using detail::getOr;
using detail::json;

namespace {

Distribution distributionFromJson(const json& obj, const std::string& path) {
    if (obj.is_number()) return Distribution::constant(obj.get<double>());
    if (obj.contains("constant")) return Distribution::constant(get<double>(obj, "constant", path));
    if (obj.contains("uniform")) {
        const auto range = get<std::vector<double>>(obj, "uniform", path);
        if (range.size() != 2) throw ConfigError(path + ".uniform", "expected [min, max]");
        return Distribution::uniform(range[0], range[1]);
    }
    throw ConfigError(path, "expected a number, {\"constant\": v} or {\"uniform\": [min, max]}");
}

json distributionToJson(const Distribution& d) {
    if (d.kind == Distribution::Kind::Constant) return json{{"constant", d.min}};
    return json{{"uniform", {d.min, d.max}}};
}

IntDistribution intDistributionFromJson(const json& obj, const std::string& path) {
    if (obj.is_number_integer()) return IntDistribution::constant(obj.get<int>());
    if (obj.contains("constant")) return IntDistribution::constant(get<int>(obj, "constant", path));
    if (obj.contains("uniform")) {
        const auto range = get<std::vector<int>>(obj, "uniform", path);
        if (range.size() != 2) throw ConfigError(path + ".uniform", "expected [min, max]");
        return IntDistribution::uniform(range[0], range[1]);
    }
    throw ConfigError(path, "expected an integer, {\"constant\": n} or {\"uniform\": [min, max]}");
}

json intDistributionToJson(const IntDistribution& d) {
    if (d.min == d.max) return json{{"constant", d.min}};
    return json{{"uniform", {d.min, d.max}}};
}

EventRule ruleFromJson(const json& obj, const std::string& path) {
    EventRule rule;
    rule.id = get<std::string>(obj, "id", path);
    rule.message = getOr<std::string>(obj, "message", path, rule.id);
    const auto category = get<std::string>(obj, "category", path);
    const auto parsed = eventCategoryFromToken(category);
    if (!parsed) throw ConfigError(path + ".category", "unknown category '" + category + "'");
    rule.category = *parsed;

    const auto when = get<json>(obj, "when", path);
    const auto whenPath = path + ".when";
    if (when.contains("announced_at_least")) rule.when.announcedAtLeast = detail::colourField(when, "announced_at_least", whenPath);
    if (when.contains("observed_at_least_mm")) rule.when.observedAtLeastMm = get<double>(when, "observed_at_least_mm", whenPath);
    if (when.contains("observed_below_mm")) rule.when.observedBelowMm = get<double>(when, "observed_below_mm", whenPath);
    if (when.contains("evacuated_fraction_at_least")) {
        rule.when.evacuatedFractionAtLeast = get<double>(when, "evacuated_fraction_at_least", whenPath);
    }
    return rule;
}

json ruleToJson(const EventRule& rule) {
    json when = json::object();
    if (rule.when.announcedAtLeast) when["announced_at_least"] = std::string(toToken(*rule.when.announcedAtLeast));
    if (rule.when.observedAtLeastMm) when["observed_at_least_mm"] = *rule.when.observedAtLeastMm;
    if (rule.when.observedBelowMm) when["observed_below_mm"] = *rule.when.observedBelowMm;
    if (rule.when.evacuatedFractionAtLeast) when["evacuated_fraction_at_least"] = *rule.when.evacuatedFractionAtLeast;
    return json{{"id", rule.id}, {"message", rule.message}, {"category", std::string(toToken(rule.category))}, {"when", when}};
}

}  // namespace

void validate(const SimulationConfig& config) {
    validate(config.population);
    validate(config.trust);
    if (config.episodeResetDays < 0) throw ConfigError("episode_reset_days", "must be nonnegative");
    if (config.eventRules) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < config.eventRules->size(); ++i) {
            const auto& rule = (*config.eventRules)[i];
            const auto path = "event_rules[" + std::to_string(i) + "]";
            if (rule.id.empty()) throw ConfigError(path + ".id", "must not be empty");
            if (!ids.insert(rule.id).second) throw ConfigError(path + ".id", "duplicate id '" + rule.id + "'");
            if (rule.when.empty()) throw ConfigError(path + ".when", "needs at least one condition");
        }
    }
}

SimulationConfig configFromText(std::string_view text) {
    const auto doc = detail::parseJson(text, "configuration");
    const auto version = get<int>(doc, "schema_version", "");
    if (version != kConfigSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(version));
    }

    SimulationConfig c;
    if (doc.contains("population")) {
        const auto& p = doc.at("population");
        const std::string path = "population";
        const auto size = getOr<long long>(p, "size", path, static_cast<long long>(c.population.size));
        if (size < 0) throw ConfigError("population.size", "must be positive");
        c.population.size = static_cast<std::size_t>(size);
        c.population.seed = getOr<std::uint64_t>(p, "seed", path, c.population.seed);
        if (p.contains("trust")) c.population.trustInit = distributionFromJson(p.at("trust"), "population.trust");
        if (p.contains("threshold_mm")) {
            c.population.thresholdMm = distributionFromJson(p.at("threshold_mm"), "population.threshold_mm");
        }
        if (p.contains("memory_depth")) {
            c.population.memoryDepth = intDistributionFromJson(p.at("memory_depth"), "population.memory_depth");
        }
        if (p.contains("strategy_weights")) {
            const auto& w = p.at("strategy_weights");
            const std::string wPath = "population.strategy_weights";
            for (auto s : kAllStrategies) c.population.strategyWeights[index(s)] = get<double>(w, std::string(toToken(s)), wPath);
        }
    }
    if (doc.contains("trust")) {
        const auto& t = doc.at("trust");
        c.trust.gainSlight = getOr<double>(t, "gain_slight", "trust", c.trust.gainSlight);
        c.trust.lossFalseAlarmRate = getOr<double>(t, "loss_false_alarm_rate", "trust", c.trust.lossFalseAlarmRate);
        c.trust.lossMissedRate = getOr<double>(t, "loss_missed_rate", "trust", c.trust.lossMissedRate);
        c.trust.surpriseToleranceMm = getOr<double>(t, "surprise_tolerance_mm", "trust", c.trust.surpriseToleranceMm);
        c.trust.severityScaleMm = getOr<double>(t, "severity_scale_mm", "trust", c.trust.severityScaleMm);
    }
    if (doc.contains("scale")) c.scale = detail::scaleFromJson(doc.at("scale"), "scale");
    if (doc.contains("event_rules")) {
        const auto& rules = doc.at("event_rules");
        if (!rules.is_array()) throw ConfigError("event_rules", "must be an array");
        std::vector<EventRule> parsed;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            parsed.push_back(ruleFromJson(rules[i], "event_rules[" + std::to_string(i) + "]"));
        }
        c.eventRules = std::move(parsed);
    }
    c.episodeResetDays = getOr<int>(doc, "episode_reset_days", "", c.episodeResetDays);
    validate(c);
    return c;
}

SimulationConfig loadConfigFile(const std::filesystem::path& path) { return configFromText(detail::readFile(path)); }

std::string toConfigText(const SimulationConfig& config) {
    json weights = json::object();
    for (auto s : kAllStrategies) weights[std::string(toToken(s))] = config.population.strategyWeights[index(s)];

    json doc{{"schema_version", kConfigSchemaVersion},
             {"population",
              {{"size", config.population.size},
               {"seed", config.population.seed},
               {"trust", distributionToJson(config.population.trustInit)},
               {"threshold_mm", distributionToJson(config.population.thresholdMm)},
               {"memory_depth", intDistributionToJson(config.population.memoryDepth)},
               {"strategy_weights", weights}}},
             {"trust",
              {{"gain_slight", config.trust.gainSlight},
               {"loss_false_alarm_rate", config.trust.lossFalseAlarmRate},
               {"loss_missed_rate", config.trust.lossMissedRate},
               {"surprise_tolerance_mm", config.trust.surpriseToleranceMm},
               {"severity_scale_mm", config.trust.severityScaleMm}}},
             {"episode_reset_days", config.episodeResetDays}};
    if (config.scale) doc["scale"] = detail::scaleToJson(*config.scale);
    if (config.eventRules) {
        json rules = json::array();
        for (const auto& r : *config.eventRules) rules.push_back(ruleToJson(r));
        doc["event_rules"] = rules;
    }
    return doc.dump(2) + "\n";
}

}  // namespace floodwatch
