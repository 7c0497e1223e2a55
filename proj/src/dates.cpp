#include "rindex/dates.hpp"

#include <cctype>
#include <cstdio>

namespace rindex {

namespace {

bool parse_fixed_uint(std::string_view s, std::size_t offset, std::size_t len, int& out) {
    if (offset + len > s.size()) return false;
    int value = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned char ch = static_cast<unsigned char>(s[offset + i]);
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
    }
    out = value;
    return true;
}

} // namespace

std::optional<Date> parse_iso_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_fixed_uint(text, 0, 4, y) || !parse_fixed_uint(text, 5, 2, m) ||
        !parse_fixed_uint(text, 8, 2, d)) {
        return std::nullopt;
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::string format_iso_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(date.year()),
                  unsigned(date.month()), unsigned(date.day()));
    return buf;
}

Date add_months_clamped(const Date& date, int months) {
    std::chrono::year_month ym{date.year(), date.month()};
    ym += std::chrono::months{months};
    Date shifted{ym.year(), ym.month(), date.day()};
    if (!shifted.ok()) {
        shifted = Date{std::chrono::year_month_day_last{ym.year(),
                       std::chrono::month_day_last{ym.month()}}};
    }
    return shifted;
}

std::int64_t serial_day(const Date& date) {
    return std::chrono::sys_days(date).time_since_epoch().count();
}

Date date_from_serial(std::int64_t days) {
    return Date{std::chrono::sys_days{std::chrono::days{days}}};
}

std::int64_t days_between(const Date& a, const Date& b) {
    return serial_day(b) - serial_day(a);
}

} // namespace rindex
