#include "floodwatch/scenario.hpp"

#include <cmath>
#include <string>

#include "floodwatch/error.hpp"
#include "json_util.hpp"

namespace floodwatch {

namespace detail {

json scaleToJson(const ColourScale& scale) {
    json risk = json::object();
    for (auto c : kAllColours) risk[std::string(toToken(c))] = scale.officialRisk(c);
    return json{{"yellow_lower_mm", scale.lowerBound(VigilanceColour::Yellow)},
                {"orange_lower_mm", scale.lowerBound(VigilanceColour::Orange)},
                {"red_lower_mm", scale.lowerBound(VigilanceColour::Red)},
                {"official_risk_mm", risk}};
}

ColourScale scaleFromJson(const json& obj, const std::string& path) {
    const auto standard = ColourScale::standard();
    const double y = getOr<double>(obj, "yellow_lower_mm", path, standard.lowerBound(VigilanceColour::Yellow));
    const double o = getOr<double>(obj, "orange_lower_mm", path, standard.lowerBound(VigilanceColour::Orange));
    const double r = getOr<double>(obj, "red_lower_mm", path, standard.lowerBound(VigilanceColour::Red));
    if (!obj.contains("official_risk_mm")) return ColourScale::fromBounds(y, o, r);

    const auto riskPath = join(path, "official_risk_mm");
    const auto defaults = ColourScale::fromBounds(y, o, r);
    PerColour<double> risk;
    for (auto c : kAllColours) {
        risk[c] = getOr<double>(obj.at("official_risk_mm"), std::string(toToken(c)), riskPath, defaults.officialRisk(c));
    }
    return ColourScale(y, o, r, risk);
}

}  // namespace detail

using detail::json;

void validate(const Scenario& scenario) {
    for (std::size_t i = 0; i < scenario.days.size(); ++i) {
        const auto& d = scenario.days[i];
        const std::size_t line = i + 1;
        if (i > 0 && scenario.days[i - 1].date.daysUntil(d.date) != 1) {
            throw IngestError(line, "dates must advance by exactly one day (" + d.date.iso() + ")");
        }
        if (!(d.observedRainMm >= 0.0) || !std::isfinite(d.observedRainMm)) throw IngestError(line, "negative observed rain");
        if (!(d.forecastRainMm >= 0.0) || !std::isfinite(d.forecastRainMm)) throw IngestError(line, "negative forecast rain");
        if (!(d.forecastConfidence >= 0.0 && d.forecastConfidence <= 1.0)) {
            throw IngestError(line, "forecast confidence outside [0,1]");
        }
    }
}

Scenario trimmed(const Scenario& scenario, Date from, Date to) {
    Scenario out = scenario;
    out.days.clear();
    for (const auto& d : scenario.days) {
        if (d.date >= from && d.date <= to) out.days.push_back(d);
    }
    return out;
}

std::string toArchiveText(const Scenario& scenario) {
    json provenance{{"kind", scenario.provenance == Provenance::Historical ? "historical" : "generated"}};
    if (scenario.seed) provenance["seed"] = *scenario.seed;

    // Header fields via nlohmann (sorted keys), days one per line so fixtures diff cleanly.
    std::string out = "{\n";
    out += "  \"schema_version\": 1,\n";
    out += "  \"name\": " + json(scenario.name).dump() + ",\n";
    out += "  \"provenance\": " + provenance.dump() + ",\n";
    out += "  \"scale\": " + detail::scaleToJson(scenario.scale).dump() + ",\n";
    out += "  \"days\": [";
    for (std::size_t i = 0; i < scenario.days.size(); ++i) {
        const auto& d = scenario.days[i];
        json day{{"date", d.date.iso()},
                 {"observed_mm", d.observedRainMm},
                 {"forecast_mm", d.forecastRainMm},
                 {"confidence", d.forecastConfidence}};
        if (d.historicalColour) day["historical_colour"] = std::string(toToken(*d.historicalColour));
        out += (i == 0 ? "\n    " : ",\n    ") + day.dump();
    }
    out += scenario.days.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

Scenario scenarioFromArchiveText(std::string_view text) {
    const json doc = detail::parseJson(text, "scenario archive");
    const auto version = detail::get<int>(doc, "schema_version", "");
    if (version != 1) throw ConfigError("schema_version", "unsupported version " + std::to_string(version));

    Scenario s;
    s.name = detail::get<std::string>(doc, "name", "");
    if (doc.contains("scale")) s.scale = detail::scaleFromJson(doc.at("scale"), "scale");
    if (doc.contains("provenance")) {
        const auto& p = doc.at("provenance");
        const auto kind = detail::get<std::string>(p, "kind", "provenance");
        if (kind == "historical") {
            s.provenance = Provenance::Historical;
        } else if (kind == "generated") {
            s.provenance = Provenance::Generated;
        } else {
            throw ConfigError("provenance.kind", "unknown provenance '" + kind + "'");
        }
        if (p.contains("seed")) s.seed = detail::get<std::uint64_t>(p, "seed", "provenance");
    }

    const auto days = detail::get<json>(doc, "days", "");
    if (!days.is_array()) throw ConfigError("days", "must be an array");
    s.days.reserve(days.size());
    for (std::size_t i = 0; i < days.size(); ++i) {
        const auto path = "days[" + std::to_string(i) + "]";
        const auto& d = days[i];
        ScenarioDay day;
        day.date = detail::dateField(d, "date", path);
        day.observedRainMm = detail::get<double>(d, "observed_mm", path);
        day.forecastRainMm = detail::get<double>(d, "forecast_mm", path);
        day.forecastConfidence = detail::get<double>(d, "confidence", path);
        if (d.contains("historical_colour")) day.historicalColour = detail::colourField(d, "historical_colour", path);
        s.days.push_back(day);
    }
    validate(s);
    return s;
}

Scenario loadScenarioFile(const std::filesystem::path& path) { return scenarioFromArchiveText(detail::readFile(path)); }

void saveScenarioFile(const Scenario& scenario, const std::filesystem::path& path) {
    detail::writeFile(path, toArchiveText(scenario));
}

}  // namespace floodwatch
