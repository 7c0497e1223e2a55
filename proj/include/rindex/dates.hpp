#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rindex {

/// Calendar date at day precision. No time zones anywhere in the ledger.
using Date = std::chrono::year_month_day;

/// Strict ISO-8601 (YYYY-MM-DD). Rejects anything that is not a real
/// calendar day (month 13, Feb 30, ...).
std::optional<Date> parse_iso_date(std::string_view text);

std::string format_iso_date(const Date& date);

/// Shifts by whole calendar months, clamping the day to the end of the
/// target month (2020-01-31 + 1 month = 2020-02-29).
Date add_months_clamped(const Date& date, int months);

/// Days since 1970-01-01.
std::int64_t serial_day(const Date& date);

Date date_from_serial(std::int64_t days);

/// b - a in days.
std::int64_t days_between(const Date& a, const Date& b);

} // namespace rindex
