#pragma once

// Straight-line reimplementation of the resident rules and the daily loop,
// written without calling the library's agent or stats functions. Tests use
// it to cross-check the engine.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

namespace oracle {

struct Band {
    double yellow = 10.0;
    double orange = 50.0;
    double red = 100.0;
    double official[4] = {5.0, 30.0, 75.0, 150.0};

    int colourOf(double rain) const {
        if (rain >= red) return 3;
        if (rain >= orange) return 2;
        if (rain >= yellow) return 1;
        return 0;
    }
};

struct Params {
    double gain = 0.02;
    double lossFalseAlarm = 0.15;
    double lossMissed = 0.40;
    double tolerance = 10.0;
    double scale = 100.0;
};

struct Agent {
    double trust = 0.5;
    double threshold = 60.0;
    int depth = 3;
    int strategy = 2;  // 0 min, 1 max, 2 mean, 3 last
    std::deque<double> memory[4];
    bool evacuated = false;
    double expected = 0.0;
    bool hasExpected = false;
};

inline double subjective(const Agent& a, int colour, double fallback) {
    const auto& m = a.memory[colour];
    if (m.empty()) return fallback;
    switch (a.strategy) {
        case 0: {
            double v = m[0];
            for (double x : m) v = x < v ? x : v;
            return v;
        }
        case 1: {
            double v = m[0];
            for (double x : m) v = x > v ? x : v;
            return v;
        }
        case 2: {
            double s = 0.0;
            double lo = m[0], hi = m[0];
            for (double x : m) {
                s += x;
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            return std::clamp(s / static_cast<double>(m.size()), lo, hi);
        }
        default:
            return m.back();
    }
}

inline double nextTrust(double trust, double expected, double observed, const Params& p) {
    const double d = observed - expected;
    const double mag = std::fabs(d);
    if (mag <= p.tolerance) return std::min(1.0, trust + p.gain);
    const double rate = d > 0 ? p.lossMissed : p.lossFalseAlarm;
    return std::max(0.0, trust - rate * (mag - p.tolerance) / p.scale);
}

struct Snapshot {
    double avgTrust = 0.0;
    double avgExpected = 0.0;
    double unaware = 0.0;
    double evacuated = 0.0;
    double subjective[4] = {0, 0, 0, 0};
};

inline Snapshot snapshot(const std::vector<Agent>& pop, const Band& band, std::optional<double> observed) {
    Snapshot s;
    if (pop.empty()) return s;
    for (const auto& a : pop) {
        s.avgTrust += a.trust;
        if (a.hasExpected) {
            s.avgExpected += a.expected;
            if (observed && a.expected < *observed) s.unaware += 1.0;
        }
        if (a.evacuated) s.evacuated += 1.0;
        for (int c = 0; c < 4; ++c) s.subjective[c] += subjective(a, c, band.official[c]);
    }
    const double n = static_cast<double>(pop.size());
    s.avgTrust /= n;
    s.avgExpected /= n;
    s.unaware /= n;
    s.evacuated /= n;
    for (double& v : s.subjective) v /= n;
    return s;
}

/// One resident population played day by day.
struct World {
    std::vector<Agent> pop;
    Band band;
    Params params;
    int resetDays = 2;
    int greenRun = 0;

    Snapshot announce(int colour, double observed) {
        for (auto& a : pop) {
            const double official = band.official[colour];
            const double subj = subjective(a, colour, official);
            a.expected = a.trust * official + (1.0 - a.trust) * subj;
            a.hasExpected = true;
            if (a.expected >= a.threshold) a.evacuated = true;
        }
        return snapshot(pop, band, observed);
    }

    Snapshot advance(int colour, double observed) {
        for (auto& a : pop) {
            a.trust = nextTrust(a.trust, a.expected, observed, params);
            a.memory[colour].push_back(observed);
            while (static_cast<int>(a.memory[colour].size()) > a.depth) a.memory[colour].pop_front();
            if (observed >= a.threshold) a.evacuated = true;
        }
        greenRun = band.colourOf(observed) == 0 ? greenRun + 1 : 0;
        if (resetDays > 0 && greenRun >= resetDays) {
            for (auto& a : pop) a.evacuated = false;
        }
        return snapshot(pop, band, observed);
    }
};

inline bool close(double a, double b, double rel = 1e-9) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel * scale;
}

}  // namespace oracle
