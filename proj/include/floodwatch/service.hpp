#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "floodwatch/config.hpp"
#include "floodwatch/scenario.hpp"
#include "floodwatch/session.hpp"

namespace floodwatch::service {

using nlohmann::json;
using Clock = std::chrono::system_clock;

inline constexpr int kViewSchemaVersion = 1;

/// Scenarios and configs available to clients, discovered once at startup.
/// Config documents are kept as text and validated when a session uses them,
/// so a broken config surfaces as a validation error naming the field.
struct ContentLibrary {
    std::map<std::string, std::shared_ptr<const Scenario>> scenarios;
    std::map<std::string, std::string> configTexts;

    /// Reads `<dir>/scenarios/*.json` and `<dir>/configs/*.json`, keyed by file stem.
    /// Unreadable scenario archives are skipped and reported in `warnings`.
    static ContentLibrary load(const std::filesystem::path& dir, std::vector<std::string>* warnings = nullptr);
};

struct ServiceOptions {
    std::chrono::seconds idleTimeout{std::chrono::hours{2}};
    /// When set, evicted sessions are written there as `<session id>.json` histories.
    std::optional<std::filesystem::path> exportDir;
    std::function<Clock::time_point()> now = [] { return Clock::now(); };
};

/// Wire-level response: HTTP-style status plus a JSON body. Errors have the
/// shape {"error": {"code", "message"[, "field"]}}.
struct Response {
    int status = 200;
    json body;
};

/// Session registry and request handlers, independent of the transport.
///
/// Mutations on one session are mutually exclusive; reads share a lock and only
/// ever observe committed states. Distinct sessions never contend.
class Service {
public:
    explicit Service(ContentLibrary content, ServiceOptions options = {});

    Response listScenarios() const;
    /// Body: {"scenario": name, "config": name, "seed": optional integer}.
    Response createSession(const json& body);
    Response getState(const std::string& sessionId) const;
    /// Body: {"colour": "green" | "yellow" | "orange" | "red"}.
    Response announce(const std::string& sessionId, const json& body);
    Response advance(const std::string& sessionId);
    Response exportHistory(const std::string& sessionId) const;

    /// Drops sessions idle for longer than the timeout; returns how many were evicted.
    std::size_t evictIdle();
    std::size_t sessionCount() const;

private:
    struct Entry;

    std::shared_ptr<Entry> find(const std::string& sessionId) const;
    void touch(Entry& entry) const;

    ContentLibrary content_;
    ServiceOptions options_;
    mutable std::shared_mutex registryMutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::atomic<std::uint64_t> nextId_{1};
};

/// ISO-8601 UTC with second precision, e.g. 2026-10-16T14:27:00Z.
std::string isoTimestamp(Clock::time_point t);

}  // namespace floodwatch::service
