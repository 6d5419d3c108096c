// floodwatch: headless harness for the flood vigilance simulator.
//
//   floodwatch run       --scenario S.json --config C.json --policy forecast --seed 7 --out history.json
//   floodwatch generate  --config generator.json --seed 3 --out scenario.json
//   floodwatch build     --rain rain.csv --vigilance vigilance.csv --name aude --out scenario.json
//   floodwatch validate  --rain rain.csv --vigilance vigilance.csv
//   floodwatch stats     --history history.json
//   floodwatch serve     --content data --port 8080
//
// Success prints a JSON summary on stdout. Failure prints one JSON line
// {"error":{"code":...,"message":...}} on stderr and exits nonzero.

#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "floodwatch/config.hpp"
#include "floodwatch/error.hpp"
#include "floodwatch/http_server.hpp"
#include "floodwatch/ingest.hpp"
#include "floodwatch/scenario.hpp"
#include "floodwatch/scenario_builder.hpp"
#include "floodwatch/serialization.hpp"
#include "floodwatch/service.hpp"
#include "floodwatch/session.hpp"

namespace fw = floodwatch;
using nlohmann::json;

namespace {

void fail(const std::string& code, const std::string& message) {
    std::cerr << json{{"error", {{"code", code}, {"message", message}}}}.dump() << std::endl;
}

std::string readAll(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fw::Error("io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeAll(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw fw::Error("io", "cannot write " + path);
    out << text;
}

json historySummary(const fw::SessionHistory& h) {
    json summary{{"scenario", h.scenarioName},
                 {"seed", h.seed},
                 {"population_size", h.populationSize},
                 {"communication", fw::communicationStats(h)}};
    if (!h.days.empty()) {
        summary["first_date"] = h.days.front().date.iso();
        summary["last_date"] = h.days.back().date.iso();
        summary["initial_avg_trust"] = h.days.front().postAlert.avgTrust;
        summary["final"] = h.days.back().postObservation;
        double peakEvacuated = 0.0;
        for (const auto& d : h.days) peakEvacuated = std::max(peakEvacuated, d.postAlert.evacuatedFraction);
        summary["peak_evacuated_fraction"] = peakEvacuated;
    }
    return summary;
}

fw::service::HttpServer* gServer = nullptr;

void onSignal(int) {
    if (gServer) gServer->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flood vigilance communication simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Play a scenario headlessly with a scripted policy");
    std::string runScenario, runConfig, runPolicy = "forecast", runOut;
    std::optional<std::uint64_t> runSeed;
    std::optional<std::size_t> runPopulation;
    run->add_option("--scenario", runScenario, "Scenario archive (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--config", runConfig, "Simulation config (JSON); defaults when omitted")->check(CLI::ExistingFile);
    run->add_option("--policy", runPolicy, "forecast | historical | oracle | always-<colour>");
    run->add_option("--seed", runSeed, "Population seed (overrides the config)");
    run->add_option("--population-size", runPopulation, "Population size (overrides the config)");
    run->add_option("--out", runOut, "Write the session history here");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a pedagogical scenario from templates");
    std::string genConfig, genOut;
    std::uint64_t genSeed = 1;
    gen->add_option("--config", genConfig, "Generator config (JSON)")->required()->check(CLI::ExistingFile);
    gen->add_option("--seed", genSeed, "Generator seed");
    gen->add_option("--out", genOut, "Write the scenario archive here")->required();

    // build
    auto* build = app.add_subcommand("build", "Build a historical scenario from rain and vigilance files");
    std::string buildRain, buildVig, buildName = "historical", buildOut, buildFrom, buildTo;
    double buildSpread = 0.0;
    std::uint64_t buildForecastSeed = 0;
    build->add_option("--rain", buildRain, "date,rain_mm CSV")->required()->check(CLI::ExistingFile);
    build->add_option("--vigilance", buildVig, "date,colour CSV")->required()->check(CLI::ExistingFile);
    build->add_option("--name", buildName, "Scenario name");
    build->add_option("--forecast-spread", buildSpread, "Relative forecast error spread (0 = perfect)");
    build->add_option("--forecast-seed", buildForecastSeed, "Forecast noise seed");
    build->add_option("--from", buildFrom, "First date to keep (YYYY-MM-DD)");
    build->add_option("--to", buildTo, "Last date to keep (YYYY-MM-DD)");
    build->add_option("--out", buildOut, "Write the scenario archive here")->required();

    // validate
    auto* val = app.add_subcommand("validate", "Ingest and check data files");
    std::string valRain, valVig, valScenario, valConfig;
    val->add_option("--rain", valRain, "date,rain_mm CSV")->check(CLI::ExistingFile);
    val->add_option("--vigilance", valVig, "date,colour CSV")->check(CLI::ExistingFile);
    val->add_option("--scenario", valScenario, "Scenario archive")->check(CLI::ExistingFile);
    val->add_option("--config", valConfig, "Simulation config")->check(CLI::ExistingFile);

    // stats
    auto* stats = app.add_subcommand("stats", "Summarize an exported session history");
    std::string statsHistory;
    stats->add_option("--history", statsHistory, "History file")->required()->check(CLI::ExistingFile);

    // serve
    auto* serve = app.add_subcommand("serve", "Serve game sessions over HTTP");
    std::string serveContent = "data", serveHost = "127.0.0.1", serveWebRoot, serveExport;
    int servePort = 8080;
    int serveIdleMinutes = 120;
    serve->add_option("--content", serveContent, "Directory with scenarios/ and configs/")->check(CLI::ExistingDirectory);
    serve->add_option("--host", serveHost, "Bind address");
    serve->add_option("--port", servePort, "Port (0 picks a free one)");
    serve->add_option("--web-root", serveWebRoot, "Static files for the web client")->check(CLI::ExistingDirectory);
    serve->add_option("--idle-minutes", serveIdleMinutes, "Evict sessions idle this long");
    serve->add_option("--export-dir", serveExport, "Write evicted sessions' histories here")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        fail("usage", e.what());
        return 2;
    }

    try {
        if (*run) {
            auto scenario = std::make_shared<const fw::Scenario>(fw::loadScenarioFile(runScenario));
            fw::SimulationConfig config = runConfig.empty() ? fw::SimulationConfig{} : fw::loadConfigFile(runConfig);
            if (runSeed) config.population.seed = *runSeed;
            if (runPopulation) config.population.size = *runPopulation;
            const auto policy = fw::policyByName(runPolicy);
            if (!policy) throw fw::UsageError("unknown policy '" + runPolicy + "'");
            const auto history = fw::runPolicy(scenario, config, policy->policy, policy->access);
            if (!runOut.empty()) writeAll(runOut, fw::toHistoryText(history));
            std::cout << historySummary(history).dump(2) << std::endl;
        } else if (*gen) {
            const auto scenario = fw::generatePedagogicalScenario(genSeed, fw::loadGeneratorConfigFile(genConfig));
            fw::saveScenarioFile(scenario, genOut);
            std::cout << json{{"name", scenario.name}, {"days", scenario.days.size()}, {"seed", genSeed}}.dump(2)
                      << std::endl;
        } else if (*build) {
            const auto rain = fw::loadRainFile(buildRain);
            const auto vigilance = fw::loadVigilanceFile(buildVig);
            auto scenario = fw::buildHistoricalScenario(buildName, rain, vigilance,
                                                        fw::ForecastModel::noisy(buildSpread, buildForecastSeed));
            if (!buildFrom.empty() || !buildTo.empty()) {
                const auto from = buildFrom.empty() ? scenario.days.front().date : fw::Date::parse(buildFrom);
                const auto to = buildTo.empty() ? scenario.days.back().date : fw::Date::parse(buildTo);
                if (!from || !to) throw fw::UsageError("--from/--to must be YYYY-MM-DD");
                scenario = fw::trimmed(scenario, *from, *to);
                if (scenario.days.empty()) throw fw::UsageError("date range selects no days");
            }
            fw::saveScenarioFile(scenario, buildOut);
            std::cout << json{{"name", scenario.name},
                              {"days", scenario.days.size()},
                              {"first_date", scenario.days.front().date.iso()},
                              {"last_date", scenario.days.back().date.iso()}}
                             .dump(2)
                      << std::endl;
        } else if (*val) {
            if (valRain.empty() && valVig.empty() && valScenario.empty() && valConfig.empty()) {
                throw fw::UsageError("nothing to validate");
            }
            json report = json::object();
            std::vector<fw::RainRecord> rain;
            std::vector<fw::VigilanceRecord> vigilance;
            if (!valRain.empty()) {
                rain = fw::loadRainFile(valRain);
                double total = 0.0;
                for (const auto& r : rain) total += r.rainMm;
                report["rain"] = {{"days", rain.size()},
                                  {"first_date", rain.front().date.iso()},
                                  {"last_date", rain.back().date.iso()},
                                  {"total_mm", total}};
            }
            if (!valVig.empty()) {
                vigilance = fw::loadVigilanceFile(valVig);
                std::map<std::string, int> counts;
                for (auto c : fw::kAllColours) counts[std::string(fw::toToken(c))] = 0;
                for (const auto& v : vigilance) ++counts[std::string(fw::toToken(v.colour))];
                report["vigilance"] = {{"days", vigilance.size()}, {"colour_days", counts}};
            }
            if (!valRain.empty() && !valVig.empty()) {
                fw::buildHistoricalScenario("validation", rain, vigilance, fw::ForecastModel::perfect());
                report["aligned"] = true;
            }
            if (!valScenario.empty()) report["scenario_days"] = fw::loadScenarioFile(valScenario).days.size();
            if (!valConfig.empty()) {
                fw::loadConfigFile(valConfig);
                report["config"] = "ok";
            }
            std::cout << report.dump(2) << std::endl;
        } else if (*stats) {
            const auto history = fw::historyFromText(readAll(statsHistory));
            std::cout << historySummary(history).dump(2) << std::endl;
        } else if (*serve) {
            std::vector<std::string> warnings;
            auto content = fw::service::ContentLibrary::load(serveContent, &warnings);
            for (const auto& w : warnings) std::cerr << "warning: " << w << std::endl;
            fw::service::ServiceOptions options;
            options.idleTimeout = std::chrono::minutes{serveIdleMinutes};
            if (!serveExport.empty()) options.exportDir = serveExport;
            fw::service::Service service(std::move(content), options);
            fw::service::HttpServer server(service, serveWebRoot.empty() ? std::nullopt
                                                                           : std::optional<std::filesystem::path>(serveWebRoot));
            const int port = server.bind(serveHost, servePort);
            if (port < 0) throw fw::Error("io", "cannot bind " + serveHost + ":" + std::to_string(servePort));
            gServer = &server;
            std::signal(SIGINT, onSignal);
            std::signal(SIGTERM, onSignal);
            std::cout << json{{"listening", serveHost + ":" + std::to_string(port)}}.dump() << std::endl;
            server.listen();
            gServer = nullptr;
        }
    } catch (const fw::Error& e) {
        fail(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        fail("internal", e.what());
        return 1;
    }
    return 0;
}
