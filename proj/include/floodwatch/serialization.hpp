#pragma once

// JSON mappings for the engine's value types, shared by history export and the service.

#include <json.hpp>

#include "floodwatch/events.hpp"
#include "floodwatch/session.hpp"
#include "floodwatch/stats.hpp"

namespace floodwatch {

void to_json(nlohmann::json& j, const PopulationStats& s);
void from_json(const nlohmann::json& j, PopulationStats& s);

void to_json(nlohmann::json& j, const CommunicationStats& s);

void to_json(nlohmann::json& j, const TriggeredEvent& e);
void from_json(const nlohmann::json& j, TriggeredEvent& e);

void to_json(nlohmann::json& j, const DayRecord& r);
void from_json(const nlohmann::json& j, DayRecord& r);

}  // namespace floodwatch
