#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace floodwatch {

/// Calendar date with day arithmetic. Text form is ISO-8601 (YYYY-MM-DD).
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}
    constexpr Date(int year, unsigned month, unsigned day)
        : days_(std::chrono::year{year} / std::chrono::month{month} / std::chrono::day{day}) {}

    /// Strict YYYY-MM-DD; returns nullopt on any deviation or an invalid calendar date.
    static std::optional<Date> parse(std::string_view text);

    std::string iso() const;
    std::chrono::year_month_day ymd() const { return std::chrono::year_month_day{days_}; }
    std::chrono::sys_days sysDays() const { return days_; }

    Date plusDays(int n) const { return Date{days_ + std::chrono::days{n}}; }
    int daysUntil(Date other) const { return static_cast<int>((other.days_ - days_).count()); }

    friend constexpr auto operator<=>(const Date&, const Date&) = default;

private:
    std::chrono::sys_days days_{};
};

}  // namespace floodwatch
