#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace floodwatch {

/// Base for every error raised by the library. `code()` is a stable,
/// machine-readable token used by the CLI and the service layer.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Invalid configuration value. `field()` is a dotted path such as
/// "population.trust.max".
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error("config", field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Malformed input data. `line()` is 1-based; 0 when the error is not tied to a row.
class IngestError : public Error {
public:
    IngestError(std::size_t line, const std::string& message)
        : Error("ingest", line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Operation called in the wrong game phase.
class ProtocolError : public Error {
public:
    explicit ProtocolError(const std::string& message) : Error("protocol", message) {}
};

/// The scenario has been fully played; no further mutation is possible.
class SessionComplete : public Error {
public:
    SessionComplete() : Error("session_complete", "scenario has ended") {}
};

/// Precondition violated by the caller.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& message) : Error("usage", message) {}
};

}  // namespace floodwatch
