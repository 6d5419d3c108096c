#include "floodwatch/service.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include "floodwatch/error.hpp"
#include "floodwatch/serialization.hpp"
#include "json_util.hpp"

namespace floodwatch::service {

struct Service::Entry {
    Entry(GameSession s, std::string scenario, std::string created)
        : session(std::move(s)), scenarioName(std::move(scenario)), createdAt(std::move(created)) {}

    mutable std::shared_mutex mutex;
    GameSession session;
    std::string scenarioName;
    std::string createdAt;
    std::vector<TriggeredEvent> pendingEvents;
    std::optional<DayRecord> lastDay;
    std::atomic<std::int64_t> lastAccessMs{0};
};

namespace {

Response error(int status, std::string code, std::string message, std::string field = {}) {
    json err{{"code", std::move(code)}, {"message", std::move(message)}};
    if (!field.empty()) err["field"] = std::move(field);
    return Response{status, json{{"error", err}}};
}

Response notFound(const std::string& what) { return error(404, "not_found", what + " not found"); }

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::int64_t toMs(Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

json summaryOf(const std::string& id, const std::string& scenarioName, const std::string& createdAt,
               const GameSession& s) {
    return json{{"session_id", id},
                {"scenario", scenarioName},
                {"day_index", s.dayIndex()},
                {"total_days", s.scenario().days.size()},
                {"phase", std::string(toToken(s.phase()))},
                {"created_at", createdAt}};
}

}  // namespace

std::string isoTimestamp(Clock::time_point t) {
    const std::time_t tt = Clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ContentLibrary ContentLibrary::load(const std::filesystem::path& dir, std::vector<std::string>* warnings) {
    namespace fs = std::filesystem;
    ContentLibrary lib;
    const auto scenarioDir = dir / "scenarios";
    if (fs::is_directory(scenarioDir)) {
        for (const auto& entry : fs::directory_iterator(scenarioDir)) {
            if (entry.path().extension() != ".json") continue;
            try {
                lib.scenarios[entry.path().stem().string()] =
                    std::make_shared<const Scenario>(loadScenarioFile(entry.path()));
            } catch (const Error& e) {
                if (warnings) warnings->push_back(entry.path().string() + ": " + e.what());
            }
        }
    }
    const auto configDir = dir / "configs";
    if (fs::is_directory(configDir)) {
        for (const auto& entry : fs::directory_iterator(configDir)) {
            if (entry.path().extension() != ".json") continue;
            lib.configTexts[entry.path().stem().string()] = detail::readFile(entry.path());
        }
    }
    return lib;
}

Service::Service(ContentLibrary content, ServiceOptions options)
    : content_(std::move(content)), options_(std::move(options)) {}

std::shared_ptr<Service::Entry> Service::find(const std::string& sessionId) const {
    std::shared_lock lock(registryMutex_);
    const auto it = sessions_.find(sessionId);
    return it == sessions_.end() ? nullptr : it->second;
}

void Service::touch(Entry& entry) const { entry.lastAccessMs.store(toMs(options_.now())); }

Response Service::listScenarios() const {
    json list = json::array();
    for (const auto& [name, scenario] : content_.scenarios) {
        list.push_back(json{{"name", name},
                            {"title", scenario->name},
                            {"days", scenario->days.size()},
                            {"first_date", scenario->days.empty() ? json(nullptr) : json(scenario->days.front().date.iso())},
                            {"provenance", scenario->provenance == Provenance::Historical ? "historical" : "generated"}});
    }
    json configs = json::array();
    for (const auto& [name, text] : content_.configTexts) configs.push_back(name);
    return Response{200, json{{"scenarios", list}, {"configs", configs}}};
}

Response Service::createSession(const json& body) {
    if (!body.is_object()) return error(400, "validation", "request body must be a JSON object");
    if (!body.contains("scenario") || !body["scenario"].is_string()) {
        return error(400, "validation", "missing scenario name", "scenario");
    }
    if (body.contains("config") && !body["config"].is_string()) {
        return error(400, "validation", "config must be a name", "config");
    }
    const auto scenarioName = body["scenario"].get<std::string>();
    const auto configName = body.value("config", std::string("default"));

    const auto scenario = content_.scenarios.find(scenarioName);
    if (scenario == content_.scenarios.end()) return notFound("scenario '" + scenarioName + "'");
    const auto configText = content_.configTexts.find(configName);
    if (configText == content_.configTexts.end()) return notFound("config '" + configName + "'");

    SimulationConfig config;
    try {
        config = configFromText(configText->second);
        if (body.contains("seed")) {
            const auto& seed = body["seed"];
            if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
                return error(400, "validation", "seed must be a nonnegative integer", "seed");
            }
            config.population.seed = body["seed"].get<std::uint64_t>();
        }
    } catch (const ConfigError& e) {
        return error(400, "validation", e.what(), e.field());
    }

    const std::uint64_t n = nextId_.fetch_add(1);
    char idBuf[32];
    std::snprintf(idBuf, sizeof idBuf, "s-%06llu", static_cast<unsigned long long>(n));
    const std::string id = idBuf;

    std::shared_ptr<Entry> entry;
    try {
        entry = std::make_shared<Entry>(GameSession(scenario->second, config, id), scenarioName,
                                        isoTimestamp(options_.now()));
    } catch (const ConfigError& e) {
        return error(400, "validation", e.what(), e.field());
    } catch (const Error& e) {
        return error(400, "validation", e.what());
    }
    touch(*entry);
    {
        std::unique_lock lock(registryMutex_);
        sessions_.emplace(id, entry);
    }
    return Response{201, summaryOf(id, entry->scenarioName, entry->createdAt, entry->session)};
}

namespace {

json stateView(const std::string& id, const std::string& scenarioName, const std::string& createdAt,
               const GameSession& s, const std::vector<TriggeredEvent>& pendingEvents,
               const std::optional<DayRecord>& lastDay) {
    const auto forecast = s.upcomingForecast();
    json weather{{"date", lastDay ? json(lastDay->date.iso()) : json(nullptr)},
                 {"observed_mm", nullable(lastDay ? std::optional<double>(lastDay->observedRainMm) : std::nullopt)},
                 {"forecast_date", forecast ? json(forecast->date.iso()) : json(nullptr)},
                 {"forecast_mm", nullable(forecast ? std::optional<double>(forecast->rainMm) : std::nullopt)},
                 {"forecast_confidence",
                  nullable(forecast ? std::optional<double>(forecast->confidence) : std::nullopt)},
                 {"current_colour",
                  s.currentColour() ? json(std::string(toToken(*s.currentColour()))) : json(nullptr)}};
    return json{{"schema_version", kViewSchemaVersion},
                {"session", summaryOf(id, scenarioName, createdAt, s)},
                {"complete", s.complete()},
                {"weather", weather},
                {"population", s.latestStats()},
                {"communication", s.communicationStats()},
                {"events", pendingEvents},
                {"last_day", lastDay ? json(*lastDay) : json(nullptr)}};
}

}  // namespace

Response Service::getState(const std::string& sessionId) const {
    const auto entry = find(sessionId);
    if (!entry) return notFound("session '" + sessionId + "'");
    std::shared_lock lock(entry->mutex);
    touch(*entry);
    return Response{200, stateView(sessionId, entry->scenarioName, entry->createdAt, entry->session,
                                   entry->pendingEvents, entry->lastDay)};
}

Response Service::announce(const std::string& sessionId, const json& body) {
    const auto entry = find(sessionId);
    if (!entry) return notFound("session '" + sessionId + "'");
    if (!body.is_object() || !body.contains("colour") || !body["colour"].is_string()) {
        return error(400, "validation", "missing colour", "colour");
    }
    const auto token = body["colour"].get<std::string>();
    const auto colour = colourFromToken(token);
    if (!colour) return error(400, "validation", "unknown colour '" + token + "'", "colour");

    std::unique_lock lock(entry->mutex);
    touch(*entry);
    try {
        entry->session.announceVigilance(*colour);
    } catch (const SessionComplete& e) {
        return error(409, e.code(), e.what());
    } catch (const ProtocolError& e) {
        return error(409, "conflict", e.what());
    }
    entry->pendingEvents.clear();
    return Response{200, stateView(sessionId, entry->scenarioName, entry->createdAt, entry->session,
                                   entry->pendingEvents, entry->lastDay)};
}

Response Service::advance(const std::string& sessionId) {
    const auto entry = find(sessionId);
    if (!entry) return notFound("session '" + sessionId + "'");

    std::unique_lock lock(entry->mutex);
    touch(*entry);
    try {
        auto result = entry->session.advanceDay();
        entry->pendingEvents = std::move(result.events);
        entry->lastDay = std::move(result.record);
    } catch (const SessionComplete& e) {
        return error(409, e.code(), e.what());
    } catch (const ProtocolError& e) {
        return error(409, "conflict", e.what());
    }
    return Response{200, stateView(sessionId, entry->scenarioName, entry->createdAt, entry->session,
                                   entry->pendingEvents, entry->lastDay)};
}

Response Service::exportHistory(const std::string& sessionId) const {
    const auto entry = find(sessionId);
    if (!entry) return notFound("session '" + sessionId + "'");
    std::shared_lock lock(entry->mutex);
    touch(*entry);
    return Response{200, json::parse(toHistoryText(entry->session.history()))};
}

std::size_t Service::evictIdle() {
    const auto cutoff = toMs(options_.now()) -
                        std::chrono::duration_cast<std::chrono::milliseconds>(options_.idleTimeout).count();
    std::vector<std::pair<std::string, std::shared_ptr<Entry>>> evicted;
    {
        std::unique_lock lock(registryMutex_);
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            if (it->second->lastAccessMs.load() < cutoff) {
                evicted.emplace_back(it->first, it->second);
                it = sessions_.erase(it);
            } else {
                ++it;
            }
        }
    }
    if (options_.exportDir) {
        for (const auto& [id, entry] : evicted) {
            std::shared_lock lock(entry->mutex);
            detail::writeFile(*options_.exportDir / (id + ".json"), toHistoryText(entry->session.history()));
        }
    }
    return evicted.size();
}

std::size_t Service::sessionCount() const {
    std::shared_lock lock(registryMutex_);
    return sessions_.size();
}

}  // namespace floodwatch::service
