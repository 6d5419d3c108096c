#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace floodwatch {

/// Four-level official vigilance scale, ordered by severity.
enum class VigilanceColour : int { Green = 0, Yellow = 1, Orange = 2, Red = 3 };

inline constexpr std::size_t kColourCount = 4;
inline constexpr std::array<VigilanceColour, kColourCount> kAllColours{
    VigilanceColour::Green, VigilanceColour::Yellow, VigilanceColour::Orange, VigilanceColour::Red};

constexpr std::size_t index(VigilanceColour c) { return static_cast<std::size_t>(c); }

/// Lowercase wire token ("green" ... "red").
std::string_view toToken(VigilanceColour c);
std::optional<VigilanceColour> colourFromToken(std::string_view token);

/// How a resident turns remembered rain into a personal estimate.
enum class RiskStrategy : int { Optimistic = 0, Pessimistic = 1, Rational = 2, ShortMemory = 3 };

inline constexpr std::size_t kStrategyCount = 4;
inline constexpr std::array<RiskStrategy, kStrategyCount> kAllStrategies{
    RiskStrategy::Optimistic, RiskStrategy::Pessimistic, RiskStrategy::Rational, RiskStrategy::ShortMemory};

constexpr std::size_t index(RiskStrategy s) { return static_cast<std::size_t>(s); }

std::string_view toToken(RiskStrategy s);
std::optional<RiskStrategy> strategyFromToken(std::string_view token);

/// Fixed-size table indexed by colour.
template <typename T>
struct PerColour {
    std::array<T, kColourCount> values{};

    T& operator[](VigilanceColour c) { return values[index(c)]; }
    const T& operator[](VigilanceColour c) const { return values[index(c)]; }

    friend bool operator==(const PerColour&, const PerColour&) = default;
};

}  // namespace floodwatch
