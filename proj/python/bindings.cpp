#include <memory>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "floodwatch/config.hpp"
#include "floodwatch/error.hpp"
#include "floodwatch/scenario.hpp"
#include "floodwatch/scenario_builder.hpp"
#include "floodwatch/serialization.hpp"
#include "floodwatch/session.hpp"

namespace py = pybind11;
using namespace floodwatch;

namespace {

// Values cross the boundary as plain dicts, built from the same JSON mappings
// the service uses.
py::object toPython(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

VigilanceColour colourArg(const std::string& token) {
    if (auto c = colourFromToken(token)) return *c;
    throw UsageError("unknown colour '" + token + "'");
}

RiskStrategy strategyArg(const std::string& token) {
    if (auto s = strategyFromToken(token)) return *s;
    throw UsageError("unknown strategy '" + token + "'");
}

using ScenarioPtr = std::shared_ptr<Scenario>;

py::dict dayDict(const ScenarioDay& d) {
    py::dict out;
    out["date"] = d.date.iso();
    out["observed_rain_mm"] = d.observedRainMm;
    out["forecast_rain_mm"] = d.forecastRainMm;
    out["forecast_confidence"] = d.forecastConfidence;
    out["historical_colour"] = d.historicalColour ? py::object(py::str(std::string(toToken(*d.historicalColour))))
                                                  : py::object(py::none());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Agent-based simulation of trust in flood vigilance announcements.";

    // Handles rather than objects: they must outlive interpreter shutdown.
    static py::handle error, configError, ingestError, protocolError, sessionComplete, usageError;
    auto declare = [&m](const char* name, py::handle base) {
        py::handle type(PyErr_NewException((std::string("floodwatch.") + name).c_str(), base.ptr(), nullptr));
        m.add_object(name, type.inc_ref());
        return type;
    };
    error = declare("Error", PyExc_RuntimeError);
    configError = declare("ConfigError", error);
    ingestError = declare("IngestError", error);
    protocolError = declare("ProtocolError", error);
    sessionComplete = declare("SessionComplete", error);
    usageError = declare("UsageError", error);
    py::register_exception_translator([](std::exception_ptr p) {
        // Raised instances carry the stable code, plus the field path or line when known.
        auto raise = [](py::handle type, const Error& e, const char* key = nullptr, py::object extra = py::none()) {
            py::object value = type(e.what());
            value.attr("code") = e.code();
            if (key) value.attr(key) = extra;
            PyErr_SetObject(type.ptr(), value.ptr());
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            raise(configError, e, "field", py::str(e.field()));
        } catch (const IngestError& e) {
            raise(ingestError, e, "line", py::int_(e.line()));
        } catch (const ProtocolError& e) {
            raise(protocolError, e);
        } catch (const SessionComplete& e) {
            raise(sessionComplete, e);
        } catch (const UsageError& e) {
            raise(usageError, e);
        } catch (const Error& e) {
            raise(error, e);
        }
    });

    py::class_<Scenario, ScenarioPtr>(m, "Scenario")
        .def_static("load", [](const std::filesystem::path& p) { return std::make_shared<Scenario>(loadScenarioFile(p)); })
        .def_static("from_text", [](const std::string& t) { return std::make_shared<Scenario>(scenarioFromArchiveText(t)); })
        .def_static("generate", [](const std::filesystem::path& config, std::uint64_t seed) {
            return std::make_shared<Scenario>(generatePedagogicalScenario(seed, loadGeneratorConfigFile(config)));
        }, py::arg("config"), py::arg("seed"))
        .def_property_readonly("name", [](const Scenario& s) { return s.name; })
        .def("__len__", [](const Scenario& s) { return s.days.size(); })
        .def("day", [](const Scenario& s, std::size_t i) { return dayDict(s.days.at(i)); })
        .def_property_readonly("days", [](const Scenario& s) {
            py::list out;
            for (const auto& d : s.days) out.append(dayDict(d));
            return out;
        })
        .def("trimmed", [](const Scenario& s, const std::string& from, const std::string& to) {
            const auto a = Date::parse(from), b = Date::parse(to);
            if (!a || !b) throw UsageError("dates must be YYYY-MM-DD");
            return std::make_shared<Scenario>(trimmed(s, *a, *b));
        })
        .def("to_text", [](const Scenario& s) { return toArchiveText(s); });

    py::class_<SimulationConfig>(m, "Config")
        .def(py::init<>())
        .def_static("load", &loadConfigFile)
        .def_static("from_text", [](const std::string& t) { return configFromText(t); })
        .def("to_text", &toConfigText)
        .def("validate", [](const SimulationConfig& c) { validate(c); })
        .def_property("population_size", [](const SimulationConfig& c) { return c.population.size; },
                      [](SimulationConfig& c, std::size_t n) { c.population.size = n; })
        .def_property("seed", [](const SimulationConfig& c) { return c.population.seed; },
                      [](SimulationConfig& c, std::uint64_t s) { c.population.seed = s; })
        .def_property("episode_reset_days", [](const SimulationConfig& c) { return c.episodeResetDays; },
                      [](SimulationConfig& c, int d) { c.episodeResetDays = d; });

    py::class_<GameSession>(m, "Session")
        .def(py::init([](ScenarioPtr scenario, std::optional<SimulationConfig> config, std::string id) {
                 return createSession(std::move(scenario), config.value_or(SimulationConfig{}), std::move(id));
             }),
             py::arg("scenario"), py::arg("config") = py::none(), py::arg("session_id") = "")
        .def("announce", [](GameSession& s, const std::string& colour) {
            return toPython(s.announceVigilance(colourArg(colour)));
        })
        .def("advance", [](GameSession& s) {
            const auto r = s.advanceDay();
            py::dict out;
            out["record"] = toPython(r.record);
            out["events"] = toPython(r.events);
            out["complete"] = r.complete;
            return out;
        })
        .def_property_readonly("id", &GameSession::id)
        .def_property_readonly("day_index", &GameSession::dayIndex)
        .def_property_readonly("phase", [](const GameSession& s) { return std::string(toToken(s.phase())); })
        .def_property_readonly("complete", &GameSession::complete)
        .def_property_readonly("stats", [](const GameSession& s) { return toPython(s.latestStats()); })
        .def_property_readonly("communication", [](const GameSession& s) { return toPython(s.communicationStats()); })
        .def_property_readonly("forecast", [](const GameSession& s) -> py::object {
            const auto f = s.upcomingForecast();
            if (!f) return py::none();
            py::dict out;
            out["date"] = f->date.iso();
            out["rain_mm"] = f->rainMm;
            out["confidence"] = f->confidence;
            return out;
        })
        .def("history_text", [](const GameSession& s) { return toHistoryText(s.history()); });

    m.def("run_policy", [](ScenarioPtr scenario, const std::string& policy, std::optional<SimulationConfig> config) {
        const auto named = policyByName(policy);
        if (!named) throw UsageError("unknown policy '" + policy + "'");
        return toHistoryText(runPolicy(std::move(scenario), config.value_or(SimulationConfig{}), named->policy, named->access));
    }, py::arg("scenario"), py::arg("policy"), py::arg("config") = py::none(),
       "Plays every day with a named policy and returns the history as JSON lines.");

    m.def("subjective_risk", [](const std::string& strategy, const std::vector<double>& memory, double fallback) {
        Resident r;
        r.strategy = strategyArg(strategy);
        r.memoryDepth = static_cast<int>(std::max<std::size_t>(1, memory.size()));
        r.memory[VigilanceColour::Green].assign(memory.begin(), memory.end());
        return subjectiveRisk(r, VigilanceColour::Green, fallback);
    }, py::arg("strategy"), py::arg("memory"), py::arg("fallback_mm"));

    m.def("blend", &blend, py::arg("trust"), py::arg("official_mm"), py::arg("subjective_mm"));

    m.def("updated_trust", [](double trust, double expected, double observed, double gain, double lossFalseAlarm,
                              double lossMissed, double tolerance, double scale) {
        const TrustParams p{gain, lossFalseAlarm, lossMissed, tolerance, scale};
        validate(p);
        return updatedTrust(trust, expected, observed, p);
    }, py::arg("trust"), py::arg("expected_mm"), py::arg("observed_mm"), py::arg("gain_slight") = 0.02,
       py::arg("loss_false_alarm_rate") = 0.15, py::arg("loss_missed_rate") = 0.40,
       py::arg("surprise_tolerance_mm") = 10.0, py::arg("severity_scale_mm") = 100.0);

    m.def("classify", [](const std::string& announced, double observed) {
        return std::string(toToken(classifyAlarm(ColourScale::standard(), colourArg(announced), observed)));
    }, py::arg("announced"), py::arg("observed_mm"));
}
