#pragma once

// Helpers shared by the JSON readers. Private to the library.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "floodwatch/colour.hpp"
#include "floodwatch/colour_scale.hpp"
#include "floodwatch/date.hpp"
#include "floodwatch/error.hpp"

namespace floodwatch::detail {

using nlohmann::json;

inline json parseJson(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string(what) + " is not valid JSON: " + e.what());
    }
}

inline std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void writeFile(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write " + path.string());
    out << text;
    if (!out) throw Error("io", "write failed for " + path.string());
}

inline std::string join(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

/// Reads `obj[key]` as T, throwing ConfigError naming `path.key` on a type mismatch.
template <typename T>
T get(const json& obj, const std::string& key, const std::string& path) {
    const auto field = join(path, key);
    if (!obj.is_object() || !obj.contains(key)) throw ConfigError(field, "missing");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(field, "wrong type");
    }
}

template <typename T>
T getOr(const json& obj, const std::string& key, const std::string& path, T fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    return get<T>(obj, key, path);
}

inline VigilanceColour colourField(const json& obj, const std::string& key, const std::string& path) {
    const auto token = get<std::string>(obj, key, path);
    const auto colour = colourFromToken(token);
    if (!colour) throw ConfigError(join(path, key), "unknown colour '" + token + "'");
    return *colour;
}

inline Date dateField(const json& obj, const std::string& key, const std::string& path) {
    const auto token = get<std::string>(obj, key, path);
    const auto date = Date::parse(token);
    if (!date) throw ConfigError(join(path, key), "invalid date '" + token + "'");
    return *date;
}

json scaleToJson(const ColourScale& scale);
ColourScale scaleFromJson(const json& obj, const std::string& path);

}  // namespace floodwatch::detail
