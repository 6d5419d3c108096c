#include "floodwatch/colour.hpp"

namespace floodwatch {

namespace {
constexpr std::array<std::string_view, kColourCount> kColourTokens{"green", "yellow", "orange", "red"};
constexpr std::array<std::string_view, kStrategyCount> kStrategyTokens{"optimistic", "pessimistic", "rational",
                                                                       "short_memory"};
}  // namespace

std::string_view toToken(VigilanceColour c) { return kColourTokens[index(c)]; }

std::optional<VigilanceColour> colourFromToken(std::string_view token) {
    for (auto c : kAllColours) {
        if (kColourTokens[index(c)] == token) return c;
    }
    return std::nullopt;
}

std::string_view toToken(RiskStrategy s) { return kStrategyTokens[index(s)]; }

std::optional<RiskStrategy> strategyFromToken(std::string_view token) {
    for (auto s : kAllStrategies) {
        if (kStrategyTokens[index(s)] == token) return s;
    }
    return std::nullopt;
}

}  // namespace floodwatch
