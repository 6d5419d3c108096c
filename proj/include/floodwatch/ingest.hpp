#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floodwatch/colour.hpp"
#include "floodwatch/date.hpp"

namespace floodwatch {

struct RainRecord {
    Date date;
    double rainMm = 0.0;

    friend bool operator==(const RainRecord&, const RainRecord&) = default;
};

struct VigilanceRecord {
    Date date;
    VigilanceColour colour = VigilanceColour::Green;

    friend bool operator==(const VigilanceRecord&, const VigilanceRecord&) = default;
};

/// Parses a `date,rain_mm` CSV. One row per calendar day with no gaps; rain is a
/// nonnegative decimal with at most one fractional digit. Throws IngestError
/// naming the offending line.
std::vector<RainRecord> loadRainSeries(std::string_view csv);
std::vector<RainRecord> loadRainFile(const std::filesystem::path& path);

/// Writes the rain CSV with one fractional digit; reparses to identical values.
std::string formatRainSeries(std::span<const RainRecord> series);

/// Parses a `date,colour` CSV. Rows may be unordered and repeated; repeated
/// dates collapse to the highest colour. The result is dense from the first to
/// the last listed date, with unlisted dates Green.
std::vector<VigilanceRecord> loadVigilanceSeries(std::string_view csv);
std::vector<VigilanceRecord> loadVigilanceFile(const std::filesystem::path& path);

std::string formatVigilanceSeries(std::span<const VigilanceRecord> series);

}  // namespace floodwatch
