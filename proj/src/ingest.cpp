#include "floodwatch/ingest.hpp"

#include <charconv>
#include <map>
#include <string>

#include "floodwatch/error.hpp"
#include "json_util.hpp"

namespace floodwatch {

namespace {

struct Row {
    std::size_t line;
    std::string_view first;
    std::string_view second;
};

// Splits into two-column rows after checking the header. Blank lines are
// tolerated only at the end of the document.
std::vector<Row> splitRows(std::string_view csv, std::string_view header) {
    if (csv.substr(0, 3) == "\xEF\xBB\xBF") csv.remove_prefix(3);
    if (csv.empty()) throw IngestError(0, "empty document");

    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineNo = 0;
    while (!csv.empty()) {
        const auto nl = csv.find('\n');
        auto line = csv.substr(0, nl);
        csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(++lineNo, line);
    }
    while (!lines.empty() && lines.back().second.empty()) lines.pop_back();
    if (lines.empty()) throw IngestError(0, "empty document");
    if (lines.front().second != header) {
        throw IngestError(1, "expected header '" + std::string(header) + "'");
    }

    std::vector<Row> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [n, text] = lines[i];
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
            throw IngestError(n, "expected exactly two comma-separated fields");
        }
        rows.push_back({n, text.substr(0, comma), text.substr(comma + 1)});
    }
    return rows;
}

Date parseDate(const Row& row) {
    const auto date = Date::parse(row.first);
    if (!date) throw IngestError(row.line, "invalid date '" + std::string(row.first) + "'");
    return *date;
}

double parseRain(const Row& row) {
    const auto token = row.second;
    if (!token.empty() && token.front() == '-') throw IngestError(row.line, "negative rain '" + std::string(token) + "'");
    const auto dot = token.find('.');
    const auto intPart = token.substr(0, dot);
    const auto fracPart = dot == std::string_view::npos ? std::string_view{} : token.substr(dot + 1);
    auto digits = [](std::string_view s) {
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    if (intPart.empty() || !digits(intPart) || !digits(fracPart) ||
        (dot != std::string_view::npos && fracPart.size() != 1)) {
        throw IngestError(row.line, "malformed rain value '" + std::string(token) + "'");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw IngestError(row.line, "malformed rain value '" + std::string(token) + "'");
    }
    return value;
}

std::string formatOneDecimal(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 1);
    return std::string(buf, ptr);
}

}  // namespace

std::vector<RainRecord> loadRainSeries(std::string_view csv) {
    const auto rows = splitRows(csv, "date,rain_mm");
    if (rows.empty()) throw IngestError(0, "no data rows");

    std::vector<RainRecord> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        const Date date = parseDate(row);
        if (!out.empty()) {
            const int step = out.back().date.daysUntil(date);
            if (step <= 0) throw IngestError(row.line, "dates must be strictly increasing (" + date.iso() + ")");
            if (step > 1) {
                throw IngestError(row.line, "missing day(s) from " + out.back().date.plusDays(1).iso() + " to " +
                                                date.plusDays(-1).iso());
            }
        }
        out.push_back({date, parseRain(row)});
    }
    return out;
}

std::vector<RainRecord> loadRainFile(const std::filesystem::path& path) {
    return loadRainSeries(detail::readFile(path));
}

std::string formatRainSeries(std::span<const RainRecord> series) {
    std::string out = "date,rain_mm\n";
    for (const auto& r : series) out += r.date.iso() + "," + formatOneDecimal(r.rainMm) + "\n";
    return out;
}

std::vector<VigilanceRecord> loadVigilanceSeries(std::string_view csv) {
    const auto rows = splitRows(csv, "date,colour");
    std::map<Date, VigilanceColour> byDate;
    for (const auto& row : rows) {
        const Date date = parseDate(row);
        const auto colour = colourFromToken(row.second);
        if (!colour) throw IngestError(row.line, "unknown colour '" + std::string(row.second) + "'");
        auto [it, inserted] = byDate.emplace(date, *colour);
        if (!inserted && it->second < *colour) it->second = *colour;
    }

    std::vector<VigilanceRecord> out;
    if (byDate.empty()) return out;
    const Date first = byDate.begin()->first;
    const Date last = byDate.rbegin()->first;
    out.reserve(static_cast<std::size_t>(first.daysUntil(last)) + 1);
    for (Date d = first; d <= last; d = d.plusDays(1)) {
        const auto it = byDate.find(d);
        out.push_back({d, it == byDate.end() ? VigilanceColour::Green : it->second});
    }
    return out;
}

std::vector<VigilanceRecord> loadVigilanceFile(const std::filesystem::path& path) {
    return loadVigilanceSeries(detail::readFile(path));
}

std::string formatVigilanceSeries(std::span<const VigilanceRecord> series) {
    std::string out = "date,colour\n";
    for (const auto& r : series) out += r.date.iso() + "," + std::string(toToken(r.colour)) + "\n";
    return out;
}

}  // namespace floodwatch
