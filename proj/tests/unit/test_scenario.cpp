#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "floodwatch/colour_scale.hpp"
#include "floodwatch/error.hpp"
#include "floodwatch/ingest.hpp"
#include "floodwatch/scenario.hpp"
#include "floodwatch/scenario_builder.hpp"

using namespace floodwatch;
using VC = VigilanceColour;

namespace {

const std::filesystem::path kData = FLOODWATCH_DATA_DIR;

std::size_t ingestLine(const std::string& csv, bool rain = true) {
    try {
        if (rain) {
            loadRainSeries(csv);
        } else {
            loadVigilanceSeries(csv);
        }
    } catch (const IngestError& e) {
        return e.line();
    }
    FAIL("expected IngestError");
    return 0;
}

std::string ingestMessage(const std::string& csv) {
    try {
        loadRainSeries(csv);
    } catch (const IngestError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("ColourScale") {
    TEST_CASE("standard bands") {
        const auto s = defaultColourScale();
        CHECK(colourFor(s, 139.8) == VC::Red);
        CHECK(colourFor(s, 0.0) == VC::Green);
        CHECK(colourFor(s, 50.0) == VC::Orange);
        CHECK(colourFor(s, 9.9) == VC::Green);
        CHECK(colourFor(s, 100.0) == VC::Red);
        CHECK(colourFor(s, 75.0) == VC::Orange);
        CHECK(colourFor(s, 10.0) == VC::Yellow);
        CHECK(colourFor(s, 49.9) == VC::Yellow);
        CHECK(s.officialRisk(VC::Green) == 5.0);
        CHECK(s.officialRisk(VC::Yellow) == 30.0);
        CHECK(s.officialRisk(VC::Orange) == 75.0);
        CHECK(s.officialRisk(VC::Red) == 150.0);
        CHECK(std::isinf(s.band(VC::Red).upperMm));
        CHECK(s.band(VC::Orange).lowerMm == 50.0);
        CHECK(s.band(VC::Orange).upperMm == 100.0);
    }

    TEST_CASE("property: exactly one band contains each rain value") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> mm(0.0, 600.0);
        const auto s = ColourScale::standard();
        for (int i = 0; i < 20000; ++i) {
            const double rain = i < 1000 ? i * 0.1 : mm(rng);
            int matches = 0;
            for (auto c : kAllColours) matches += s.band(c).contains(rain) ? 1 : 0;
            REQUIRE(matches == 1);
            REQUIRE(s.band(s.colourFor(rain)).contains(rain));
        }
    }

    TEST_CASE("property: official risk maps back to its colour") {
        std::mt19937_64 rng(22);
        std::uniform_real_distribution<double> step(0.5, 80.0);
        for (int i = 0; i < 300; ++i) {
            const double y = step(rng), o = y + step(rng), r = o + step(rng);
            const auto s = ColourScale::fromBounds(y, o, r);
            for (auto c : kAllColours) REQUIRE(s.colourFor(s.officialRisk(c)) == c);
        }
    }

    TEST_CASE("invalid scales are rejected") {
        CHECK_THROWS_AS(ColourScale::fromBounds(50, 10, 100), ConfigError);
        CHECK_THROWS_AS(ColourScale::fromBounds(0, 10, 100), ConfigError);
        CHECK_THROWS_AS(ColourScale(10, 50, 100, PerColour<double>{{5, 30, 120, 150}}), ConfigError);
    }
}

TEST_SUITE("loadRainSeries") {
    TEST_CASE("case-study row") {
        const auto s = loadRainSeries("date,rain_mm\n2018-10-13,0.4\n2018-10-14,139.8\n");
        REQUIRE(s.size() == 2);
        CHECK(s[1].date == Date(2018, 10, 14));
        CHECK(s[1].rainMm == 139.8);
    }

    TEST_CASE("empty input is an error") {
        CHECK_THROWS_AS(loadRainSeries(""), IngestError);
        CHECK_THROWS_AS(loadRainSeries("date,rain_mm\n"), IngestError);
    }

    TEST_CASE("negative rain names the line") {
        CHECK(ingestLine("date,rain_mm\n2018-10-01,1.0\n2018-10-02,-3\n") == 3);
        CHECK(ingestMessage("date,rain_mm\n2018-10-01,-3\n").find("line 2") != std::string::npos);
    }

    TEST_CASE("malformed rows name the line") {
        CHECK(ingestLine("date,rain\n2018-10-01,1\n") == 1);
        CHECK(ingestLine("date,rain_mm\n2018-10-01\n") == 2);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,1,2\n") == 2);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,1\n2018/10/02,1\n") == 3);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,abc\n") == 2);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,1.25\n") == 2);
        CHECK(ingestLine("date,rain_mm\n2018-02-30,1\n") == 2);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,\n") == 2);
    }

    TEST_CASE("dates must increase without gaps") {
        CHECK(ingestLine("date,rain_mm\n2018-10-02,1\n2018-10-01,1\n") == 3);
        CHECK(ingestLine("date,rain_mm\n2018-10-02,1\n2018-10-02,1\n") == 3);
        CHECK(ingestLine("date,rain_mm\n2018-10-01,1\n2018-10-04,1\n") == 3);
        CHECK(ingestMessage("date,rain_mm\n2018-10-01,1\n2018-10-04,1\n").find("2018-10-02 to 2018-10-03") !=
              std::string::npos);
    }

    TEST_CASE("CRLF, BOM and trailing blank lines are accepted") {
        const auto s = loadRainSeries("\xEF\xBB\xBF" "date,rain_mm\r\n2018-10-01,0\r\n2018-10-02,12.5\r\n\r\n");
        REQUIRE(s.size() == 2);
        CHECK(s[1].rainMm == 12.5);
    }

    TEST_CASE("property: format and reparse is lossless") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> tenths(0, 5000);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<RainRecord> series;
            Date d(2010, 1, 1);
            for (int i = 0; i < 200; ++i) series.push_back({d.plusDays(i), tenths(rng) / 10.0});
            const auto text = formatRainSeries(series);
            const auto back = loadRainSeries(text);
            REQUIRE(back == series);
            REQUIRE(formatRainSeries(back) == text);
        }
    }
}

TEST_SUITE("loadVigilanceSeries") {
    TEST_CASE("absent dates are green and duplicates keep the highest") {
        const auto s = loadVigilanceSeries("date,colour\n2018-10-13,yellow\n2018-10-15,orange\n2018-10-15,red\n");
        REQUIRE(s.size() == 3);
        CHECK(s[0].colour == VC::Yellow);
        CHECK(s[1].date == Date(2018, 10, 14));
        CHECK(s[1].colour == VC::Green);
        CHECK(s[2].colour == VC::Red);
    }

    TEST_CASE("order of duplicate bulletins does not matter") {
        const auto a = loadVigilanceSeries("date,colour\n2018-10-15,red\n2018-10-15,orange\n");
        const auto b = loadVigilanceSeries("date,colour\n2018-10-15,orange\n2018-10-15,red\n");
        CHECK(a == b);
        CHECK(a.front().colour == VC::Red);
    }

    TEST_CASE("unknown colour is an error with its line") {
        CHECK(ingestLine("date,colour\n2018-10-14,orange\n2018-10-15,purple\n", false) == 3);
        CHECK_THROWS_AS(loadVigilanceSeries(""), IngestError);
        CHECK(ingestLine("date,color\n2018-10-14,orange\n", false) == 1);
    }

    TEST_CASE("format and reparse is lossless") {
        const auto s = loadVigilanceFile(kData / "raw" / "aude_vigilance_2010_2018.csv");
        CHECK(loadVigilanceSeries(formatVigilanceSeries(s)) == s);
    }
}

TEST_SUITE("fixtures") {
    TEST_CASE("rain fixture covers 2010-2018 daily") {
        const auto rain = loadRainFile(kData / "raw" / "carcassonne_rain_2010_2018.csv");
        REQUIRE(rain.size() == 3287);
        CHECK(rain.front().date == Date(2010, 1, 1));
        CHECK(rain.back().date == Date(2018, 12, 31));
        CHECK(loadRainSeries(formatRainSeries(rain)) == rain);
    }

    TEST_CASE("October 2018 under-warning is present") {
        const auto scenario = loadScenarioFile(kData / "scenarios" / "aude_october_2018.json");
        CHECK(scenario.days.front().date == Date(2018, 10, 1));
        CHECK(scenario.days.size() == 31);
        const auto& day = scenario.days[13];
        CHECK(day.date == Date(2018, 10, 14));
        CHECK(day.observedRainMm == 139.8);
        CHECK(day.historicalColour == VC::Orange);
        CHECK(scenario.scale.colourFor(day.observedRainMm) == VC::Red);
        CHECK(scenario.days[14].historicalColour == VC::Red);
    }

    TEST_CASE("full scenario matches a rebuild from the raw files") {
        const auto rain = loadRainFile(kData / "raw" / "carcassonne_rain_2010_2018.csv");
        const auto vig = loadVigilanceFile(kData / "raw" / "aude_vigilance_2010_2018.csv");
        const auto built = buildHistoricalScenario("Aude 2010-2018", rain, vig, ForecastModel::noisy(0.3, 2018));
        CHECK(built == loadScenarioFile(kData / "scenarios" / "aude_2010_2018.json"));
    }
}

TEST_SUITE("buildHistoricalScenario") {
    const auto rain = loadRainSeries("date,rain_mm\n2018-10-12,0\n2018-10-13,0.4\n2018-10-14,139.8\n2018-10-15,31.2\n");

    TEST_CASE("perfect forecast copies the truth") {
        const auto vig = loadVigilanceSeries("date,colour\n2018-10-14,orange\n2018-10-15,red\n");
        const auto s = buildHistoricalScenario("t", rain, vig, ForecastModel::perfect());
        REQUIRE(s.days.size() == 4);
        for (const auto& d : s.days) {
            CHECK(d.forecastRainMm == d.observedRainMm);
            CHECK(d.forecastConfidence == 1.0);
        }
        CHECK(s.days[0].historicalColour == VC::Green);
        CHECK(s.days[2].historicalColour == VC::Orange);
        CHECK(s.days[3].historicalColour == VC::Red);
        CHECK(s.provenance == Provenance::Historical);
    }

    TEST_CASE("noisy forecast is deterministic and bounded") {
        const auto vig = loadVigilanceSeries("date,colour\n2018-10-14,orange\n");
        const auto model = ForecastModel::noisy(0.4, 7);
        const auto a = buildHistoricalScenario("t", rain, vig, model);
        const auto b = buildHistoricalScenario("t", rain, vig, model);
        CHECK(a == b);
        CHECK(toArchiveText(a) == toArchiveText(b));
        const auto c = buildHistoricalScenario("t", rain, vig, ForecastModel::noisy(0.4, 8));
        CHECK_FALSE(a == c);
        for (const auto& d : a.days) {
            CHECK(d.forecastRainMm >= 0.0);
            CHECK(d.forecastConfidence >= 0.0);
            CHECK(d.forecastConfidence <= 1.0);
        }
    }

    TEST_CASE("vigilance outside the rain range lists the dates") {
        const auto vig = loadVigilanceSeries("date,colour\n2018-10-14,orange\n2018-10-17,red\n");
        try {
            buildHistoricalScenario("t", rain, vig, ForecastModel::perfect());
            FAIL("expected IngestError");
        } catch (const IngestError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("2018-10-16") != std::string::npos);
            CHECK(msg.find("2018-10-17") != std::string::npos);
        }
    }

    TEST_CASE("forecast error stays within confidence bookkeeping") {
        const auto model = ForecastModel::noisy(0.3, 1);
        for (int i = 0; i < 200; ++i) {
            const auto f = model.forecast(Date(2015, 1, 1).plusDays(i), 50.0);
            const double err = std::abs(f.rainMm / 50.0 - 1.0);
            CHECK(f.confidence == doctest::Approx(1.0 / (1.0 + err)).epsilon(0.02));
        }
    }
}

TEST_SUITE("generatePedagogicalScenario") {
    TEST_CASE("false-alarm cluster then surprise flood") {
        GeneratorConfig c;
        c.templates = {{EpisodeKind::FalseAlarmCluster, 3}, {EpisodeKind::SurpriseFlood, 1}};
        const auto s = generatePedagogicalScenario(4, c);
        REQUIRE(s.days.size() == 4);
        for (int i = 0; i < 3; ++i) {
            CHECK(s.days[i].forecastRainMm >= 50.0);
            CHECK(s.days[i].observedRainMm < 10.0);
        }
        CHECK(s.days[3].forecastRainMm < 10.0);
        CHECK(s.days[3].observedRainMm >= 100.0);
        CHECK(s.provenance == Provenance::Generated);
        CHECK(s.seed == 4u);
        CHECK(s.days[0].date == c.startDate);
    }

    TEST_CASE("regeneration is byte-identical") {
        const auto c = loadGeneratorConfigFile(kData / "generators" / "pedagogical_demo.json");
        CHECK(toArchiveText(generatePedagogicalScenario(3, c)) == toArchiveText(generatePedagogicalScenario(3, c)));
        CHECK(generatePedagogicalScenario(3, c) == loadScenarioFile(kData / "scenarios" / "classroom_demo.json"));
    }

    TEST_CASE("empty template list is a configuration error") {
        CHECK_THROWS_AS(generatePedagogicalScenario(1, GeneratorConfig{}), ConfigError);
        CHECK_THROWS_AS(generatePedagogicalScenario(1, generatorConfigFromText(R"({"templates": []})")), ConfigError);
    }

    TEST_CASE("bad generator documents") {
        CHECK_THROWS_AS(generatorConfigFromText(R"({"templates": [{"kind": "drought"}]})"), ConfigError);
        CHECK_THROWS_AS(generatorConfigFromText(R"({"ordering": "random", "templates": []})"), ConfigError);
        CHECK_THROWS_AS(generatorConfigFromText("{"), ConfigError);
        GeneratorConfig c;
        c.templates = {{EpisodeKind::QuietStretch, 0}};
        CHECK_THROWS_AS(generatePedagogicalScenario(1, c), ConfigError);
        c.templates = {{EpisodeKind::QuietStretch, 5}};
        c.ordering = GeneratorConfig::Ordering::Weighted;
        c.totalDays = 3;
        CHECK_THROWS_AS(generatePedagogicalScenario(1, c), ConfigError);
    }

    TEST_CASE("property: every day satisfies its template") {
        const auto scale = ColourScale::standard();
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            GeneratorConfig c;
            c.ordering = GeneratorConfig::Ordering::Sequential;
            const std::vector<EpisodeKind> kinds{EpisodeKind::QuietStretch, EpisodeKind::FalseAlarmCluster,
                                                 EpisodeKind::SurpriseFlood, EpisodeKind::OrangeEvent,
                                                 EpisodeKind::RedEvent};
            for (auto k : kinds) c.templates.push_back({k, 1 + static_cast<int>(seed % 4)});
            const auto s = generatePedagogicalScenario(seed, c);
            std::size_t i = 0;
            for (const auto& t : c.templates) {
                for (int k = 0; k < t.days; ++k, ++i) {
                    const auto& d = s.days.at(i);
                    const auto f = scale.colourFor(d.forecastRainMm);
                    const auto o = scale.colourFor(d.observedRainMm);
                    switch (t.kind) {
                        case EpisodeKind::QuietStretch:
                            REQUIRE(o == VC::Green);
                            REQUIRE(f == VC::Green);
                            break;
                        case EpisodeKind::FalseAlarmCluster:
                            REQUIRE(f >= VC::Orange);
                            REQUIRE(o == VC::Green);
                            break;
                        case EpisodeKind::SurpriseFlood:
                            REQUIRE(f == VC::Green);
                            REQUIRE(o == VC::Red);
                            break;
                        case EpisodeKind::OrangeEvent:
                            REQUIRE(f == VC::Orange);
                            REQUIRE(o == VC::Orange);
                            break;
                        case EpisodeKind::RedEvent:
                            REQUIRE(f == VC::Red);
                            REQUIRE(o == VC::Red);
                            break;
                    }
                    REQUIRE(d.forecastConfidence >= 0.0);
                    REQUIRE(d.forecastConfidence <= 1.0);
                }
            }
            REQUIRE_NOTHROW(validate(s));
        }
    }

    TEST_CASE("weighted ordering fills the requested length with every template") {
        const auto c = loadGeneratorConfigFile(kData / "generators" / "weighted_season.json");
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const auto s = generatePedagogicalScenario(seed, c);
            CHECK(s.days.size() == 90);
            bool surprise = false, overForecast = false;
            for (const auto& d : s.days) {
                surprise |= d.forecastRainMm < 10.0 && d.observedRainMm >= 100.0;
                overForecast |= d.forecastRainMm >= 50.0 && d.observedRainMm < 10.0;
            }
            CHECK(surprise);
            CHECK(overForecast);
        }
    }
}

TEST_SUITE("scenario archive") {
    TEST_CASE("round trip") {
        GeneratorConfig c;
        c.templates = {{EpisodeKind::RedEvent, 2}, {EpisodeKind::QuietStretch, 3}};
        c.ordering = GeneratorConfig::Ordering::Shuffled;
        const auto s = generatePedagogicalScenario(9, c);
        const auto text = toArchiveText(s);
        CHECK(scenarioFromArchiveText(text) == s);
        CHECK(toArchiveText(scenarioFromArchiveText(text)) == text);

        const auto path = std::filesystem::temp_directory_path() / "floodwatch_archive_roundtrip.json";
        saveScenarioFile(s, path);
        CHECK(loadScenarioFile(path) == s);
        std::filesystem::remove(path);
    }

    TEST_CASE("trim keeps the inclusive range") {
        const auto s = loadScenarioFile(kData / "scenarios" / "aude_2010_2018.json");
        const auto t = trimmed(s, Date(2018, 10, 1), Date(2018, 10, 31));
        CHECK(t.days.size() == 31);
        CHECK(t.days == loadScenarioFile(kData / "scenarios" / "aude_october_2018.json").days);
    }

    TEST_CASE("validation reports the day") {
        Scenario s;
        s.days = {{Date(2018, 1, 1), 0, 0, 1, std::nullopt}, {Date(2018, 1, 3), 0, 0, 1, std::nullopt}};
        CHECK_THROWS_AS(validate(s), IngestError);
        s.days[1].date = Date(2018, 1, 2);
        CHECK_NOTHROW(validate(s));
        s.days[1].forecastConfidence = 1.5;
        CHECK_THROWS_AS(validate(s), IngestError);
        s.days[1].forecastConfidence = 1.0;
        s.days[1].observedRainMm = -1.0;
        CHECK_THROWS_AS(validate(s), IngestError);
    }

    TEST_CASE("malformed archives") {
        CHECK_THROWS_AS(scenarioFromArchiveText("not json"), Error);
        CHECK_THROWS_AS(scenarioFromArchiveText(R"({"schema_version": 99, "name": "x", "days": []})"), Error);
    }
}
