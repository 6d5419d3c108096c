#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "floodwatch/service.hpp"

namespace floodwatch::service {

/// HTTP transport for Service.
///
///   GET  /api/v1/scenarios
///   POST /api/v1/sessions                    {"scenario", "config", "seed"}
///   GET  /api/v1/sessions/{id}
///   POST /api/v1/sessions/{id}/announce      {"colour"}
///   POST /api/v1/sessions/{id}/advance
///   GET  /api/v1/sessions/{id}/history
///
/// Everything else is served from `webRoot` when given.
class HttpServer {
public:
    explicit HttpServer(Service& service, std::optional<std::filesystem::path> webRoot = std::nullopt);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds to `port`, or to a free port when `port` is 0. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop() is called. Runs idle eviction every `evictionInterval`.
    void listen(std::chrono::seconds evictionInterval = std::chrono::seconds{60});
    void stop();
    void waitUntilReady() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace floodwatch::service
