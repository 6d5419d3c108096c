#include "floodwatch/http_server.hpp"

#include <condition_variable>
#include <mutex>
#include <thread>

#include <httplib.h>

namespace floodwatch::service {

struct HttpServer::Impl {
    Service& service;
    httplib::Server server;
    std::mutex stopMutex;
    std::condition_variable stopCv;
    bool stopping = false;

    explicit Impl(Service& s) : service(s) {}
};

namespace {

void reply(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
}

json parseBody(const httplib::Request& req, bool& ok) {
    ok = true;
    if (req.body.empty()) return json::object();
    auto body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) ok = false;
    return body;
}

void badJson(httplib::Response& res) {
    reply(res, Response{400, json{{"error", {{"code", "validation"}, {"message", "request body is not valid JSON"}}}}});
}

}  // namespace

HttpServer::HttpServer(Service& service, std::optional<std::filesystem::path> webRoot)
    : impl_(std::make_unique<Impl>(service)) {
    auto& srv = impl_->server;
    auto& svc = impl_->service;

    srv.Get("/api/v1/scenarios", [&svc](const httplib::Request&, httplib::Response& res) {
        reply(res, svc.listScenarios());
    });
    srv.Post("/api/v1/sessions", [&svc](const httplib::Request& req, httplib::Response& res) {
        bool ok = false;
        const auto body = parseBody(req, ok);
        if (!ok) return badJson(res);
        reply(res, svc.createSession(body));
    });
    srv.Get("/api/v1/sessions/:id", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.getState(req.path_params.at("id")));
    });
    srv.Post("/api/v1/sessions/:id/announce", [&svc](const httplib::Request& req, httplib::Response& res) {
        bool ok = false;
        const auto body = parseBody(req, ok);
        if (!ok) return badJson(res);
        reply(res, svc.announce(req.path_params.at("id"), body));
    });
    srv.Post("/api/v1/sessions/:id/advance", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.advance(req.path_params.at("id")));
    });
    srv.Get("/api/v1/sessions/:id/history", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.exportHistory(req.path_params.at("id")));
    });

    if (webRoot) srv.set_mount_point("/", webRoot->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen(std::chrono::seconds evictionInterval) {
    std::thread evictor([this, evictionInterval] {
        std::unique_lock lock(impl_->stopMutex);
        while (!impl_->stopCv.wait_for(lock, evictionInterval, [this] { return impl_->stopping; })) {
            impl_->service.evictIdle();
        }
    });
    impl_->server.listen_after_bind();
    {
        std::lock_guard lock(impl_->stopMutex);
        impl_->stopping = true;
    }
    impl_->stopCv.notify_all();
    evictor.join();
}

void HttpServer::stop() {
    if (!impl_) return;
    {
        std::lock_guard lock(impl_->stopMutex);
        impl_->stopping = true;
    }
    impl_->stopCv.notify_all();
    impl_->server.stop();
}

void HttpServer::waitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace floodwatch::service
